#include "kacq/kacpoly.hpp"

#include <algorithm>
#include <map>

#include "kacq/closedforms.hpp"
#include "kacq/errors.hpp"

namespace kacq {

namespace {

using RF = RationalFunction;

RF qp(long e) { return RF::q(e); }
RF qm1(long e) { return RF::q(e) - RF(1); }  // q^e - 1

void check_alpha(int alpha) {
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
}

QPoly q_minus_one_pow(int k) {
  QPoly p(1), base = QPoly::q(1) - QPoly(1);
  for (int i = 0; i < k; ++i) p *= base;
  return p;
}

RF iterate_sum(const TypeRecurrence& rec, int alpha) {
  check_alpha(alpha);
  std::vector<RF> s = rec.initial;
  for (int a = 1; a < alpha; ++a) {
    std::vector<RF> next(s.size());
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = 0; j < s.size(); ++j)
        if (!rec.matrix[i][j].is_zero() && !s[j].is_zero()) next[i] += rec.matrix[i][j] * s[j];
    s = std::move(next);
  }
  RF total;
  for (const auto& x : s) total += x;
  return total;
}

// Sum over strict chains E_1 < ... < E_k of proper arrow subsets (the empty
// subset allowed only when include_empty) of prod w(E_j), w(E) = 1/(q^{b - b(E)} - 1).
// G[E] is the sum over chains starting at E.
RF chain_weight_sum(const Quiver& Q, bool include_empty) {
  EdgeMask full = all_edges(Q);
  int b = betti(Q);
  int n = Q.num_arrows();
  std::vector<RF> G(static_cast<size_t>(1) << n);
  std::map<int, RF> w;
  auto weight = [&](EdgeMask E) -> const RF& {
    int k = b - betti_of(Q, E);
    auto it = w.find(k);
    if (it == w.end()) {
      if (k <= 0) throw Error(ErrorKind::Not2Connected, "proper arrow subset with full Betti number");
      it = w.emplace(k, qm1(k).inverse()).first;
    }
    return it->second;
  };
  RF total(1);
  // decreasing popcount order so supersets are ready
  std::vector<EdgeMask> order;
  for (EdgeMask E = 0; E < full; ++E) order.push_back(E);
  std::sort(order.begin(), order.end(), [](EdgeMask a, EdgeMask b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  for (EdgeMask E : order) {
    RF above(1);
    EdgeMask rest = full & ~E;
    for (EdgeMask s = (rest - 1) & rest; s; s = (s - 1) & rest) above += G[E | s];
    G[E] = weight(E) * above;
    if (E != 0 || include_empty) total += G[E];
  }
  return total;
}

}  // namespace

QPoly toric_kac_wyss(const Quiver& Q, int alpha) {
  check_alpha(alpha);
  if (!is_connected(Q)) throw Error(ErrorKind::NotConnected, "toric Kac polynomial needs a connected quiver");
  ChainConstraints c;
  c.restriction_connected = true;
  std::map<int, QPoly> powers;
  QPoly out;
  for (const auto& chain : chains_of_edge_subsets(Q, alpha, c)) {
    int top = betti_of(Q, chain.back());
    long low = 0;
    for (int k = 0; k + 1 < alpha; ++k) low += betti_of(Q, chain[static_cast<size_t>(k)]);
    auto it = powers.find(top);
    if (it == powers.end()) it = powers.emplace(top, q_minus_one_pow(top)).first;
    out += it->second.shift(low);
  }
  return out;
}

std::vector<ValuedTree> valued_spanning_trees(const Quiver& Q, int alpha) {
  check_alpha(alpha);
  if (!is_connected(Q)) throw Error(ErrorKind::NotConnected, "valued spanning trees need a connected quiver");
  std::vector<ValuedTree> out;
  for (const auto& tree : spanning_trees(Q)) {
    int loops = 0;
    struct Chord {
      int arrow;
      std::vector<int> path;  // positions in `tree`
    };
    std::vector<Chord> chords;
    for (int a = 0; a < Q.num_arrows(); ++a) {
      if (std::binary_search(tree.begin(), tree.end(), a)) continue;
      if (Q.is_loop(a)) {
        ++loops;
        continue;
      }
      Chord ch{a, {}};
      for (int e : tree_path(Q, tree, Q.arrow(a).src, Q.arrow(a).dst))
        ch.path.push_back(static_cast<int>(std::lower_bound(tree.begin(), tree.end(), e) - tree.begin()));
      chords.push_back(std::move(ch));
    }
    std::vector<int> v(tree.size(), 0);
    while (true) {
      int n = loops * alpha;
      for (const auto& ch : chords) {
        int vmax = -1, e = -1;
        for (int pos : ch.path) {
          int val = v[static_cast<size_t>(pos)], arrow = tree[static_cast<size_t>(pos)];
          if (val > vmax || (val == vmax && arrow < e)) {
            vmax = val;
            e = arrow;
          }
        }
        n += alpha - vmax - (ch.arrow > e ? 1 : 0);
      }
      out.push_back({tree, v, n});
      size_t k = 0;
      while (k < v.size() && ++v[k] == alpha) v[k++] = 0;
      if (k == v.size()) break;
    }
  }
  return out;
}

QPoly toric_kac_trees(const Quiver& Q, int alpha) {
  std::map<int, long> hist;
  for (const auto& t : valued_spanning_trees(Q, alpha)) ++hist[t.n_T];
  QPoly out;
  for (const auto& [e, c] : hist) out += QPoly::monomial(Rat(c), e);
  return out;
}

RationalFunction gl_order_rf(int alpha, const RankVector& r) {
  check_alpha(alpha);
  RF out(1);
  for (int ri : r) {
    if (ri < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
    out *= qp(static_cast<long>(alpha - 1) * ri * ri);
    for (int k = 0; k < ri; ++k) out *= qp(ri) - qp(k);
  }
  return out;
}

TypeRecurrence gloop_rank2_data(int g) {
  if (g < 1) throw Error(ErrorKind::InvalidArgument, "g must be positive");
  RF h(ratio(1, 2));
  RF z;
  TypeRecurrence rec;
  // types I, II_1, II_2, II_3
  rec.matrix = {
      {qp(4 * g - 3), z, z, z},
      {h * qp(2 * g - 2) * qm1(2), qp(2 * g), z, z},
      {qp(2 * g - 3) * qm1(2), z, qp(2 * g), z},
      {h * qp(2 * g - 2) * qm1(1) * qm1(1), z, z, qp(2 * g)},
  };
  rec.initial = {
      qp(4 * g) / (qp(1) * qm1(1) * (qp(1) + RF(1))),
      // (q-1)(q-2)/2 split classes, centraliser (q-1)^2, q^{2g} fixed tuples
      qp(2 * g) * (qp(1) - RF(2)) / (RF(2) * qm1(1)),
      qp(2 * g - 1),
      qp(2 * g + 1) / (RF(2) * (qp(1) + RF(1))),
  };
  return rec;
}

TypeRecurrence gloop_rank3_data(int g) {
  if (g < 1) throw Error(ErrorKind::InvalidArgument, "g must be positive");
  RF z, q1 = qm1(1), q2 = qm1(2), q3 = qm1(3), qm2 = qp(1) - RF(2), qm3 = qp(1) - RF(3);
  auto c = [](long n, long d) { return RF(ratio(n, d)); };
  TypeRecurrence rec;
  // types G, L, J, T1, T2, T3, M, N, K0, Kinf
  rec.matrix = {
      {qp(9 * g - 8), z, z, z, z, z, z, z, z, z},
      {qp(5 * g - 6) * q3, qp(5 * g - 3), z, z, z, z, z, z, z, z},
      {qp(5 * g - 8) * q2 * q3 / q1, z, qp(5 * g - 3), z, z, z, z, z, z, z},
      {qp(3 * g - 5) * qm2 * q2 * q3 / (c(6, 1) * q1), c(1, 2) * qp(3 * g - 2) * q2, z, qp(3 * g), z, z, z, z, z, z},
      {c(1, 2) * qp(3 * g - 4) * q1 * q3, c(1, 2) * qp(3 * g - 2) * q1 * q1, z, z, qp(3 * g), z, z, z, z, z},
      {c(1, 3) * qp(3 * g - 5) * q1 * q2 * q2, z, z, z, z, qp(3 * g), z, z, z, z},
      {qp(3 * g - 6) * q2 * q3, qp(3 * g - 3) * q2, qp(3 * g - 1) * q1, z, z, z, qp(3 * g), z, z, z},
      {qp(3 * g - 7) * q2 * q3, z, qp(3 * g - 3) * q1 * q1, z, z, z, z, qp(3 * g), z, z},
      {z, z, qp(3 * g - 3) * q1, z, z, z, z, z, qp(3 * g), z},
      // J feeds K_inf exactly as it feeds K_0; without it A_3 at (g, alpha, q) = (1, 2, 2)
      // comes out 28 instead of the directly counted 32
      {z, z, qp(3 * g - 3) * q1, z, z, z, z, z, z, qp(3 * g)},
  };
  rec.initial = {
      qp(9 * g - 3) / (q2 * q3),
      qp(5 * g - 1) * qm2 / (q1 * q2),
      qp(5 * g - 3) / q1,
      qp(3 * g) * qm2 * qm3 / (c(6, 1) * q1 * q1),
      qp(3 * g + 1) / (c(2, 1) * (qp(1) + RF(1))),
      qp(3 * g + 1) * q2 / (c(3, 1) * q3),
      qp(3 * g - 1) * qm2 / q1,
      qp(3 * g - 2),
      z,
      z,
  };
  return rec;
}

RationalFunction recurrence_sum(const TypeRecurrence& rec, int alpha) { return iterate_sum(rec, alpha); }

RationalFunction gloop_rank2_recurrence(int g, int alpha) { return iterate_sum(gloop_rank2_data(g), alpha); }
RationalFunction gloop_rank3_recurrence(int g, int alpha) { return iterate_sum(gloop_rank3_data(g), alpha); }

std::vector<RationalFunction> gloop_kac_from_recurrence(int g, int alpha, int max_rank) {
  check_alpha(alpha);
  if (g < 1) throw Error(ErrorKind::InvalidArgument, "g must be positive");
  if (max_rank < 1 || max_rank > 3) throw Error(ErrorKind::InvalidArgument, "rank must be 1, 2 or 3");
  TruncatedSeries M = TruncatedSeries::one({max_rank});
  M.set({1}, qp(static_cast<long>(alpha) * g));
  if (max_rank >= 2) M.set({2}, gloop_rank2_recurrence(g, alpha));
  if (max_rank >= 3) M.set({3}, gloop_rank3_recurrence(g, alpha));
  TruncatedSeries A = m_to_a(M);
  std::vector<RF> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(A.coeff({r}));
  return out;
}

TruncatedSeries m_to_a(const TruncatedSeries& M) { return plethystic_log(M); }
TruncatedSeries a_to_m(const TruncatedSeries& A) { return plethystic_exp(A); }

RationalFunction rank1_fiber_count(const Quiver& Q, int alpha) {
  check_alpha(alpha);
  int n = Q.num_vertices();
  if (n == 0) return RF(1);
  if (n > 12) throw Error(ErrorKind::CapExceeded, "too many vertices for the partition sum");
  RF unit_factor = RF(1) - qp(-1);
  std::vector<RF> block(static_cast<size_t>(1) << n);
  std::vector<char> done(block.size(), 0);
  auto block_value = [&](const std::vector<int>& I) -> const RF& {
    unsigned mask = 0;
    for (int i : I) mask |= 1u << i;
    if (!done[mask]) {
      Quiver R = restrict_vertices(Q, I);
      block[mask] = is_connected(R) ? RF(toric_kac_trees(R, alpha)) / unit_factor : RF();
      done[mask] = 1;
    }
    return block[mask];
  };
  RF sum;
  for_each_set_partition(n, [&](const SetPartition& P) {
    RF term(1);
    for (const auto& I : P) {
      const RF& v = block_value(I);
      if (v.is_zero()) return;
      term *= v;
    }
    sum += term;
  });
  return unit_factor.pow(n) * qp(static_cast<long>(alpha) * Q.num_arrows()) * sum;
}

RationalFunction limit_A(const Quiver& Q) {
  if (Q.num_arrows() > kMaxLimitArrows) throw Error(ErrorKind::CapExceeded, "too many arrows for the chain sum");
  if (!is_2_connected(Q)) throw Error(ErrorKind::Not2Connected, "limits exist only for 2-connected quivers");
  int b = betti(Q);
  return (RF(1) - qp(-1)).pow(b) * chain_weight_sum(Q, true);
}

RationalFunction limit_B(const Quiver& Q) {
  RF a = limit_A(Q);
  return a * (RF(1) - qp(-1)).pow(Q.num_vertices() - 1);
}

RationalFunction order_complex_hilbert(const Quiver& Q) {
  if (Q.num_arrows() > kMaxLimitArrows) throw Error(ErrorKind::CapExceeded, "too many arrows for the order complex");
  if (!is_2_connected(Q)) throw Error(ErrorKind::Not2Connected, "order complex specialisation needs a 2-connected quiver");
  int b = betti(Q);
  // faces are chains of proper nonempty subsets; group them by the multiset of exponents
  std::map<std::vector<int>, long> census;
  for_each_strict_chain(all_edges(Q), false, [&](const std::vector<EdgeMask>& chain) {
    std::vector<int> ks;
    for (EdgeMask E : chain) ks.push_back(b - betti_of(Q, E));
    std::sort(ks.begin(), ks.end());
    ++census[ks];
  });
  RF out;
  for (const auto& [ks, count] : census) {
    RF term(count);
    for (int k : ks) {
      if (k <= 0) throw Error(ErrorKind::Not2Connected, "proper arrow subset with full Betti number");
      RF u = qp(-k);
      term *= u / (RF(1) - u);
    }
    out += term;
  }
  return out;
}

namespace {

template <class C>
std::vector<C> expand_zeta(const std::vector<C>& num, const std::vector<C>& den, int K) {
  if (den.empty() || den[0] == C(0)) throw Error(ErrorKind::PoleAtEvaluationPoint, "zeta function has a pole at T = 0");
  std::vector<C> z(static_cast<size_t>(K + 1));
  for (int n = 0; n <= K; ++n) {
    C acc = n < static_cast<int>(num.size()) ? num[static_cast<size_t>(n)] : C(0);
    for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k)
      acc -= den[static_cast<size_t>(k)] * z[static_cast<size_t>(n - k)];
    z[static_cast<size_t>(n)] = acc / den[0];
  }
  return z;
}

// F = (1 - T Z) / (1 - T), coefficients 1..n_max
template <class C>
std::vector<C> poincare_coeffs(const std::vector<C>& num, const std::vector<C>& den, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "negative jet depth");
  std::vector<C> z = expand_zeta(num, den, std::max(0, n_max - 1));
  std::vector<C> out;
  C acc(1);
  for (int n = 1; n <= n_max; ++n) {
    acc -= z[static_cast<size_t>(n - 1)];
    out.push_back(acc);
  }
  return out;
}

}  // namespace

std::vector<RationalFunction> poincare_from_zeta(const ZetaForm& Z, int m, int n_max) {
  auto F = poincare_coeffs(Z.num, Z.den, n_max);
  for (int n = 1; n <= n_max; ++n) F[static_cast<size_t>(n - 1)] *= qp(static_cast<long>(m) * n);
  return F;
}

std::vector<Rat> poincare_from_zeta(const ZetaForm& Z, const Rat& q0, int m, int n_max) {
  std::vector<Rat> num, den;
  for (const auto& c : Z.num) num.push_back(rf_eval(c, q0));
  for (const auto& c : Z.den) den.push_back(rf_eval(c, q0));
  auto F = poincare_coeffs(num, den, n_max);
  Rat qm = 1;
  for (int i = 0; i < m; ++i) qm *= q0;
  Rat scale = 1;
  for (int n = 1; n <= n_max; ++n) {
    scale *= qm;
    F[static_cast<size_t>(n - 1)] *= scale;
  }
  return F;
}

RationalFunction kronecker_kac_from_zeta(int r, int alpha) {
  check_alpha(alpha);
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  Quiver K = Quiver::kronecker(r);
  std::vector<RF> jets = poincare_from_zeta(kronecker_Z(r), kronecker_Z_vars(r), alpha);
  auto fiber = [&](const RankVector& d) -> RF {
    if (d == RankVector{1, 2}) return jets.back();
    if (d == RankVector{1, 1}) return rank1_fiber_count(K, alpha);
    return RF(1);  // supported on one vertex: the space is a point
  };
  TruncatedSeries vol = TruncatedSeries::one({1, 2});
  for (const RankVector& d : {RankVector{1, 0}, RankVector{0, 1}, RankVector{1, 1}, RankVector{0, 2}, RankVector{1, 2}})
    vol.set(d, fiber(d) / gl_order_rf(alpha, d) * qp(static_cast<long>(alpha) * euler_form(K, d, d)));
  TruncatedSeries A = plethystic_log(vol);
  return A.coeff({1, 2}) * (RF(1) - qp(-1));
}

}  // namespace kacq
