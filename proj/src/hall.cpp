#include "kacq/hall.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <mutex>
#include <set>
#include <tuple>

#include "kacq/errors.hpp"

namespace kacq {

namespace {

void check_rank(const RankVector& r) {
  if (r.size() != 2 || r[0] < 0 || r[1] < 0)
    throw Error(ErrorKind::DimensionMismatch, "A_2 rank vectors have two nonnegative entries");
}

void check_same_alpha(const HallFunction& f, const HallFunction& g) {
  if (f.alpha != g.alpha) throw Error(ErrorKind::DimensionMismatch, "Hall functions over different rings");
}

RankVector add(const RankVector& a, const RankVector& b) { return {a[0] + b[0], a[1] + b[1]}; }
RankVector sub(const RankVector& a, const RankVector& b) { return {a[0] - b[0], a[1] - b[1]}; }

// rank of the residue matrix rows chosen greedily; returns the pivot rows
std::vector<int> greedy_pivots(const ORing& R, const OMatrix& G) {
  const Fq& F = R.field();
  std::vector<std::vector<int>> basis;  // reduced residue rows
  std::vector<int> lead;                // leading column of each basis row
  std::vector<int> piv;
  for (int i = 0; i < G.rows; ++i) {
    std::vector<int> v(static_cast<size_t>(G.cols));
    for (int j = 0; j < G.cols; ++j) v[static_cast<size_t>(j)] = static_cast<int>(R.residue(G(i, j)));
    for (size_t b = 0; b < basis.size(); ++b) {
      int c = v[static_cast<size_t>(lead[b])];
      if (c == 0) continue;
      for (int j = 0; j < G.cols; ++j)
        v[static_cast<size_t>(j)] = F.sub(v[static_cast<size_t>(j)], F.mul(c, basis[b][static_cast<size_t>(j)]));
    }
    int l = -1;
    for (int j = 0; j < G.cols; ++j)
      if (v[static_cast<size_t>(j)] != 0) {
        l = j;
        break;
      }
    if (l < 0) continue;
    int inv = F.inv(v[static_cast<size_t>(l)]);
    for (auto& e : v) e = F.mul(e, inv);
    for (size_t b = 0; b < basis.size(); ++b) {
      int c = basis[b][static_cast<size_t>(l)];
      if (c == 0) continue;
      for (int j = 0; j < G.cols; ++j)
        basis[b][static_cast<size_t>(j)] = F.sub(basis[b][static_cast<size_t>(j)], F.mul(c, v[static_cast<size_t>(j)]));
    }
    basis.push_back(v);
    lead.push_back(l);
    piv.push_back(i);
  }
  return piv;
}

// free direct summand of O^n with generator matrix G, G[pivots] = identity
struct Summand {
  OMatrix G;
  std::vector<int> pivots, others;
};

std::vector<Summand> build_summands(const ORing& R, int n, int k, const HallConfig& cfg) {
  std::vector<Summand> out;
  if (k < 0 || k > n) return out;
  std::vector<int> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = i;
  std::vector<bool> choose(static_cast<size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + k, true);
  std::uint64_t scanned = 0;
  do {
    std::vector<int> P, O;
    for (int i = 0; i < n; ++i) (choose[static_cast<size_t>(i)] ? P : O).push_back(i);
    int free_entries = (n - k) * k;
    std::vector<OElem> fill(static_cast<size_t>(free_entries), 0);
    while (true) {
      if (++scanned > cfg.max_candidates) throw Error(ErrorKind::CapExceeded, "too many submodule candidates");
      OMatrix G(n, k);
      for (int c = 0; c < k; ++c) G(P[static_cast<size_t>(c)], c) = 1;
      for (size_t a = 0; a < O.size(); ++a)
        for (int c = 0; c < k; ++c) G(O[a], c) = fill[a * static_cast<size_t>(k) + static_cast<size_t>(c)];
      if (greedy_pivots(R, G) == P) out.push_back({G, P, O});
      size_t pos = 0;
      while (pos < fill.size() && ++fill[pos] == R.size()) fill[pos++] = 0;
      if (pos == fill.size()) break;
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

const std::vector<Summand>& summands(const ORing& R, int n, int k, const HallConfig& cfg) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::vector<Summand>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(R.q(), R.alpha(), n, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_summands(R, n, k, cfg)).first;
  return it->second;
}

OMatrix select(const OMatrix& A, const std::vector<int>& rows, const std::vector<int>& cols) {
  OMatrix B(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) B(static_cast<int>(i), static_cast<int>(j)) = A(rows[i], cols[j]);
  return B;
}

std::vector<int> all_cols(int n) {
  std::vector<int> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = i;
  return c;
}

// calls f(quotient point, sub point) for each x-stable locally free M of rank s
template <class F>
void for_each_stable(const ORing& R, const OMatrix& x, const RankVector& r, const RankVector& s,
                     const HallConfig& cfg, F&& f) {
  const auto& S1 = summands(R, r[0], s[0], cfg);
  const auto& S2 = summands(R, r[1], s[1], cfg);
  for (const auto& m2 : S2) {
    // x minus its projection onto M_2 along the complementary coordinates
    OMatrix xp = select(x, m2.pivots, all_cols(r[0]));
    OMatrix resid = mat_sub(R, x, mat_mul(R, m2.G, xp));
    for (const auto& m1 : S1) {
      OMatrix xg = mat_mul(R, resid, m1.G);
      bool stable = true;
      for (OElem e : xg.e)
        if (e != 0) {
          stable = false;
          break;
        }
      if (!stable) continue;
      OMatrix on_sub = mat_mul(R, xp, m1.G);
      OMatrix on_quot = select(resid, m2.others, m1.others);
      f(on_quot, on_sub);
    }
  }
}

void check_product_ranks(const RankVector& r) {
  if (r[0] + r[1] > 4) throw Error(ErrorKind::CapExceeded, "Hall products are enumerated for total rank <= 4");
}

}  // namespace

std::vector<OrbitLabel> hall_orbits(int alpha, const RankVector& r) {
  check_rank(r);
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  int m = std::min(r[0], r[1]);
  std::vector<OrbitLabel> out;
  OrbitLabel l(static_cast<size_t>(alpha), 0);
  // all compositions with sum <= m, in lexicographic order
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == alpha) {
      out.push_back(l);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      l[static_cast<size_t>(i)] = v;
      rec(i + 1, left - v);
    }
    l[static_cast<size_t>(i)] = 0;
  };
  rec(0, m);
  return out;
}

OrbitLabel orbit_label(const ORing& R, const OMatrix& x) {
  OrbitLabel l(static_cast<size_t>(R.alpha()), 0);
  if (x.rows == 0 || x.cols == 0) return l;
  for (int g : smith_invariants(R, x))
    if (g < R.alpha()) ++l[static_cast<size_t>(g)];
  return l;
}

OMatrix orbit_representative(const ORing& R, const OrbitLabel& label, const RankVector& r) {
  check_rank(r);
  OMatrix x(r[1], r[0]);
  int pos = 0;
  for (size_t i = 0; i < label.size(); ++i)
    for (int c = 0; c < label[i]; ++c, ++pos) {
      if (pos >= std::min(r[0], r[1])) throw Error(ErrorKind::InvalidArgument, "orbit label exceeds the rank");
      x(pos, pos) = R.t_pow(static_cast<int>(i));
    }
  return x;
}

OrbitLabel direct_sum_label(const OrbitLabel& a, const OrbitLabel& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "labels over different rings");
  OrbitLabel c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

bool is_indecomposable_orbit(const OrbitLabel& label, const RankVector& r) {
  int s = 0;
  for (int v : label) s += v;
  if (r == RankVector{1, 0} || r == RankVector{0, 1}) return true;
  return r == RankVector{1, 1} && s == 1;
}

Rat HallFunction::operator()(const OrbitLabel& l) const {
  auto it = values.find(l);
  return it == values.end() ? Rat(0) : it->second;
}

HallFunction HallFunction::zero(int alpha, const RankVector& r) {
  check_rank(r);
  HallFunction f;
  f.alpha = alpha;
  f.rank = r;
  return f;
}

HallFunction HallFunction::unit(int alpha) { return constant(alpha, {0, 0}, 1); }

HallFunction HallFunction::constant(int alpha, const RankVector& r, const Rat& c) {
  HallFunction f = zero(alpha, r);
  if (c != 0)
    for (const auto& l : hall_orbits(alpha, r)) f.values[l] = c;
  return f;
}

HallFunction HallFunction::indicator(int alpha, const RankVector& r, const OrbitLabel& l) {
  HallFunction f = zero(alpha, r);
  auto orbits = hall_orbits(alpha, r);
  if (std::find(orbits.begin(), orbits.end(), l) == orbits.end())
    throw Error(ErrorKind::InvalidArgument, "not an orbit label of this rank");
  f.values[l] = 1;
  return f;
}

HallFunction HallFunction::simple(int alpha, int vertex) {
  if (vertex != 0 && vertex != 1) throw Error(ErrorKind::InvalidArgument, "A_2 has vertices 0 and 1");
  return constant(alpha, vertex == 0 ? RankVector{1, 0} : RankVector{0, 1}, 1);
}

HallFunction HallFunction::orbit_indicator(int alpha, int i) {
  if (i < 0 || i > alpha) throw Error(ErrorKind::InvalidArgument, "orbit index out of range");
  OrbitLabel l(static_cast<size_t>(alpha), 0);
  if (i < alpha) l[static_cast<size_t>(i)] = 1;
  return indicator(alpha, {1, 1}, l);
}

bool HallFunction::is_zero() const {
  for (const auto& [l, v] : values)
    if (v != 0) return false;
  return true;
}

bool operator==(const HallFunction& a, const HallFunction& b) {
  if (a.alpha != b.alpha || a.rank != b.rank) return false;
  for (const auto& [l, v] : a.values)
    if (b(l) != v) return false;
  for (const auto& [l, v] : b.values)
    if (a(l) != v) return false;
  return true;
}

HallFunction operator+(const HallFunction& a, const HallFunction& b) {
  check_same_alpha(a, b);
  if (a.rank != b.rank) throw Error(ErrorKind::DimensionMismatch, "adding Hall functions of different ranks");
  HallFunction c = a;
  for (const auto& [l, v] : b.values) c.values[l] += v;
  for (auto it = c.values.begin(); it != c.values.end();) it = it->second == 0 ? c.values.erase(it) : std::next(it);
  return c;
}

HallFunction operator-(const HallFunction& a, const HallFunction& b) { return a + Rat(-1) * b; }

HallFunction operator*(const Rat& c, const HallFunction& f) {
  HallFunction g = f;
  for (auto& [l, v] : g.values) v *= c;
  return g;
}

std::map<std::pair<OrbitLabel, OrbitLabel>, Int> hall_numbers(int alpha, const RankVector& r, const OrbitLabel& x,
                                                              const RankVector& sub_rank, int q,
                                                              const HallConfig& cfg) {
  check_rank(r);
  check_rank(sub_rank);
  check_product_ranks(r);
  if (sub_rank[0] > r[0] || sub_rank[1] > r[1]) throw Error(ErrorKind::DimensionMismatch, "sub rank exceeds rank");
  auto R = ORing::make(q, alpha);
  static std::mutex mu;
  static std::map<std::tuple<int, int, RankVector, OrbitLabel, RankVector>,
                  std::map<std::pair<OrbitLabel, OrbitLabel>, Int>>
      cache;
  auto key = std::make_tuple(q, alpha, r, x, sub_rank);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::map<std::pair<OrbitLabel, OrbitLabel>, Int> out;
  OMatrix rep = orbit_representative(*R, x, r);
  for_each_stable(*R, rep, r, sub_rank, cfg, [&](const OMatrix& quot, const OMatrix& subm) {
    out[{orbit_label(*R, quot), orbit_label(*R, subm)}] += 1;
  });
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = out;
  return out;
}

HallFunction hall_product(const HallFunction& f, const HallFunction& g, int q, const HallConfig& cfg) {
  check_same_alpha(f, g);
  RankVector r = add(f.rank, g.rank);
  check_product_ranks(r);
  HallFunction out = HallFunction::zero(f.alpha, r);
  if (f.is_zero() || g.is_zero()) return out;
  for (const auto& x : hall_orbits(f.alpha, r)) {
    Rat v = 0;
    for (const auto& [key, n] : hall_numbers(f.alpha, r, x, g.rank, q, cfg)) v += Rat(n) * f(key.first) * g(key.second);
    if (v != 0) out.values[x] = v;
  }
  return out;
}

bool operator==(const HallTensor& a, const HallTensor& b) {
  if (a.alpha != b.alpha || a.left != b.left || a.right != b.right) return false;
  auto get = [](const HallTensor& t, const std::pair<OrbitLabel, OrbitLabel>& k) {
    auto it = t.values.find(k);
    return it == t.values.end() ? Rat(0) : it->second;
  };
  for (const auto& [k, v] : a.values)
    if (get(b, k) != v) return false;
  for (const auto& [k, v] : b.values)
    if (get(a, k) != v) return false;
  return true;
}

std::vector<HallTensor> hall_coproduct(const HallFunction& f) {
  std::vector<HallTensor> out;
  const RankVector& r = f.rank;
  for (int a = 0; a <= r[0]; ++a)
    for (int b = 0; b <= r[1]; ++b) {
      HallTensor t;
      t.alpha = f.alpha;
      t.left = {a, b};
      t.right = sub(r, t.left);
      for (const auto& l1 : hall_orbits(f.alpha, t.left))
        for (const auto& l2 : hall_orbits(f.alpha, t.right)) {
          Rat v = f(direct_sum_label(l1, l2));
          if (v != 0) t.values[{l1, l2}] = v;
        }
      out.push_back(std::move(t));
    }
  return out;
}

HallTensor tensor_product(const HallTensor& a, const HallTensor& b, int q, const HallConfig& cfg) {
  if (a.alpha != b.alpha) throw Error(ErrorKind::DimensionMismatch, "tensors over different rings");
  HallTensor t;
  t.alpha = a.alpha;
  t.left = add(a.left, b.left);
  t.right = add(a.right, b.right);
  check_product_ranks(t.left);
  check_product_ranks(t.right);
  if (a.values.empty() || b.values.empty()) return t;
  auto get = [](const HallTensor& s, const OrbitLabel& x, const OrbitLabel& y) {
    auto it = s.values.find({x, y});
    return it == s.values.end() ? Rat(0) : it->second;
  };
  for (const auto& x1 : hall_orbits(t.alpha, t.left)) {
    auto h1 = hall_numbers(t.alpha, t.left, x1, b.left, q, cfg);
    for (const auto& x2 : hall_orbits(t.alpha, t.right)) {
      auto h2 = hall_numbers(t.alpha, t.right, x2, b.right, q, cfg);
      Rat v = 0;
      for (const auto& [k1, n1] : h1)
        for (const auto& [k2, n2] : h2) {
          Rat fa = get(a, k1.first, k2.first);
          if (fa == 0) continue;
          v += Rat(n1 * n2) * fa * get(b, k1.second, k2.second);
        }
      if (v != 0) t.values[{x1, x2}] = v;
    }
  }
  return t;
}

std::vector<HallTensor> coproduct_product(const HallFunction& f, const HallFunction& g, int q,
                                          const HallConfig& cfg) {
  check_same_alpha(f, g);
  RankVector r = add(f.rank, g.rank);
  std::map<RankVector, HallTensor> acc;
  for (int a = 0; a <= r[0]; ++a)
    for (int b = 0; b <= r[1]; ++b) {
      HallTensor t;
      t.alpha = f.alpha;
      t.left = {a, b};
      t.right = sub(r, t.left);
      acc[t.left] = t;
    }
  auto df = hall_coproduct(f), dg = hall_coproduct(g);
  for (const auto& s : df)
    for (const auto& u : dg) {
      HallTensor p = tensor_product(s, u, q, cfg);
      auto& tgt = acc[p.left];
      for (const auto& [k, v] : p.values) tgt.values[k] += v;
    }
  std::vector<HallTensor> out;
  for (auto& [k, t] : acc) {
    for (auto it = t.values.begin(); it != t.values.end();) it = it->second == 0 ? t.values.erase(it) : std::next(it);
    out.push_back(std::move(t));
  }
  return out;
}

bool is_primitive(const HallFunction& f) {
  for (const auto& t : hall_coproduct(f)) {
    bool edge = (t.left == RankVector{0, 0}) || (t.right == RankVector{0, 0});
    if (!edge && !t.values.empty()) return false;
  }
  return true;
}

int primitive_space_dim(int alpha, const RankVector& r) {
  if (r == RankVector{0, 0}) return 0;
  // coproducts of distinct indicators have disjoint supports, so the
  // primitive space is spanned by the primitive indicators
  int d = 0;
  for (const auto& l : hall_orbits(alpha, r))
    if (is_primitive(HallFunction::indicator(alpha, r, l))) ++d;
  return d;
}

HallFunction bracket(const HallFunction& f, const HallFunction& g, int q, const HallConfig& cfg) {
  return hall_product(f, g, q, cfg) - hall_product(g, f, q, cfg);
}

namespace {

const int kFit[] = {2, 3, 4, 5, 7};
const int kCheck = 9;

// Lagrange interpolation of q -> value over the fit points, checked at kCheck
template <class K>
std::map<K, QPoly> interpolate(const std::function<std::map<K, Rat>(int)>& at) {
  const size_t n = std::size(kFit);
  std::vector<std::map<K, Rat>> vals;
  for (int q : kFit) vals.push_back(at(q));
  std::map<K, Rat> chk = at(kCheck);
  std::set<K> keys;
  for (const auto& m : vals)
    for (const auto& [k, v] : m) keys.insert(k);
  for (const auto& [k, v] : chk) keys.insert(k);
  auto get = [](const std::map<K, Rat>& m, const K& k) {
    auto it = m.find(k);
    return it == m.end() ? Rat(0) : it->second;
  };
  std::map<K, QPoly> out;
  for (const auto& k : keys) {
    QPoly p;
    for (size_t i = 0; i < n; ++i) {
      QPoly basis(1);
      Rat denom = 1;
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        basis = basis * (QPoly::q(1) - QPoly(Rat(kFit[j])));
        denom *= kFit[i] - kFit[j];
      }
      p += basis * QPoly(get(vals[i], k) / denom);
    }
    if (p.eval(Rat(kCheck)) != get(chk, k))
      throw Error(ErrorKind::InvalidArgument, "structure constant is not a polynomial of degree <= 4 in q");
    if (!p.is_zero()) out[k] = p;
  }
  return out;
}

}  // namespace

HallPolyFunction hall_product_poly(const HallFunction& f, const HallFunction& g, const HallConfig& cfg) {
  check_same_alpha(f, g);
  HallPolyFunction out;
  out.alpha = f.alpha;
  out.rank = add(f.rank, g.rank);
  out.values = interpolate<OrbitLabel>([&](int q) { return hall_product(f, g, q, cfg).values; });
  return out;
}

HallFunction hall_product_euler(const HallFunction& f, const HallFunction& g, const HallConfig& cfg) {
  HallPolyFunction p = hall_product_poly(f, g, cfg);
  HallFunction out = HallFunction::zero(p.alpha, p.rank);
  for (const auto& [x, poly] : p.values) {
    Rat v = poly.eval(Rat(1));
    if (v != 0) out.values[x] = v;
  }
  return out;
}

HallFunction bracket_euler(const HallFunction& f, const HallFunction& g, const HallConfig& cfg) {
  return hall_product_euler(f, g, cfg) - hall_product_euler(g, f, cfg);
}

std::vector<HallTensor> coproduct_product_euler(const HallFunction& f, const HallFunction& g, const HallConfig& cfg) {
  using Key = std::tuple<RankVector, OrbitLabel, OrbitLabel>;
  auto polys = interpolate<Key>([&](int q) {
    std::map<Key, Rat> m;
    for (const auto& t : coproduct_product(f, g, q, cfg))
      for (const auto& [k, v] : t.values) m[{t.left, k.first, k.second}] = v;
    return m;
  });
  std::vector<HallTensor> out = coproduct_product(f, g, 2, cfg);
  for (auto& t : out) t.values.clear();
  for (const auto& [k, poly] : polys) {
    Rat v = poly.eval(Rat(1));
    if (v == 0) continue;
    for (auto& t : out)
      if (t.left == std::get<0>(k)) t.values[{std::get<1>(k), std::get<2>(k)}] = v;
  }
  return out;
}

}  // namespace kacq
