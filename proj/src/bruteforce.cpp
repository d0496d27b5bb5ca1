#include "kacq/bruteforce.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "kacq/errors.hpp"

namespace kacq {

namespace {

void require_equal_multiplicities(const Quiver& Q) {
  if (!Q.equal_multiplicities())
    throw Error(ErrorKind::InvalidArgument, "brute force supports equal multiplicities only");
}

void check_ranks(const Quiver& Q, const RankVector& r) {
  if (static_cast<int>(r.size()) != Q.num_vertices()) throw Error(ErrorKind::DimensionMismatch, "rank vector length");
  for (int x : r)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative rank");
}

Int ipow(int q, long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return r;
}

// Splits [0, n) into `jobs` interleaved shards and adds the partial sums.
template <class F>
Int parallel_sum(std::uint64_t n, int jobs, F f) {
  if (jobs <= 1 || n < 2) return f(0, 1, n);
  std::vector<Int> part(static_cast<size_t>(jobs));
  std::vector<std::thread> th;
  for (int k = 0; k < jobs; ++k)
    th.emplace_back([&, k] { part[static_cast<size_t>(k)] = f(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(jobs), n); });
  for (auto& t : th) t.join();
  Int s = 0;
  for (const auto& p : part) s += p;
  return s;
}

// ---- residue-field helpers ----

int fq_rank(const Fq& F, std::vector<int> a, int n) {
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int p = -1;
    for (int i = rank; i < n; ++i)
      if (a[static_cast<size_t>(i * n + c)]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a[static_cast<size_t>(p * n + j)], a[static_cast<size_t>(rank * n + j)]);
    int inv = F.inv(a[static_cast<size_t>(rank * n + c)]);
    for (int i = 0; i < n; ++i) {
      if (i == rank || !a[static_cast<size_t>(i * n + c)]) continue;
      int f = F.mul(a[static_cast<size_t>(i * n + c)], inv);
      for (int j = 0; j < n; ++j)
        a[static_cast<size_t>(i * n + j)] = F.sub(a[static_cast<size_t>(i * n + j)], F.mul(f, a[static_cast<size_t>(rank * n + j)]));
    }
    ++rank;
  }
  return rank;
}

bool fq_nilpotent(const Fq& F, const std::vector<int>& a, int n) {
  std::vector<int> p = a;
  for (int k = 1; k < n; ++k) {
    std::vector<int> nx(static_cast<size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        int x = p[static_cast<size_t>(i * n + l)];
        if (!x) continue;
        for (int j = 0; j < n; ++j)
          nx[static_cast<size_t>(i * n + j)] = F.add(nx[static_cast<size_t>(i * n + j)], F.mul(x, a[static_cast<size_t>(l * n + j)]));
      }
    p = std::move(nx);
  }
  return std::all_of(p.begin(), p.end(), [](int x) { return x == 0; });
}

// ---- group elements acting on flat points ----

struct GroupElement {
  std::vector<OMatrix> g, ginv;
};

class GroupEnumerator {
 public:
  // quotient by scalars: fix g_v = 1 at the first rank-1 vertex, if any
  GroupEnumerator(const ORing& R, const RankVector& r, std::uint64_t cap) {
    int n = static_cast<int>(r.size());
    for (int i = 0; i < n; ++i)
      if (r[static_cast<size_t>(i)] == 1) {
        fixed_ = i;
        break;
      }
    Int total = 1;
    for (int i = 0; i < n; ++i)
      if (i != fixed_) total *= gl_order(R.q(), R.alpha(), r[static_cast<size_t>(i)]);
    if (total > Int(static_cast<unsigned long>(cap)))
      throw Error(ErrorKind::CapExceeded, "group of order " + total.get_str() + " exceeds cap " + std::to_string(cap));
    size_ = total.get_ui();
    lists_.resize(static_cast<size_t>(n));
    invs_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (i == fixed_) {
        lists_[static_cast<size_t>(i)] = {OMatrix::identity(1)};
      } else {
        lists_[static_cast<size_t>(i)] = gl_enumerate(R, r[static_cast<size_t>(i)], cap);
      }
      for (const auto& m : lists_[static_cast<size_t>(i)]) invs_[static_cast<size_t>(i)].push_back(mat_inverse(R, m));
    }
    full_order_ = gl_order(R.q(), R.alpha(), r);
  }
  std::uint64_t size() const { return size_; }
  const Int& full_order() const { return full_order_; }
  // element number k in mixed radix over the vertex lists
  void get(std::uint64_t k, GroupElement& out) const {
    size_t n = lists_.size();
    out.g.resize(n);
    out.ginv.resize(n);
    for (size_t i = 0; i < n; ++i) {
      std::uint64_t m = lists_[i].size();
      out.g[i] = lists_[i][k % m];
      out.ginv[i] = invs_[i][k % m];
      k /= m;
    }
  }

 private:
  int fixed_ = -1;
  std::uint64_t size_ = 1;
  Int full_order_;
  std::vector<std::vector<OMatrix>> lists_, invs_;
};

// dst = g_j x_a g_i^{-1} on each arrow, all matrices flat and row-major
void act(const ORing& R, const Quiver& Q, const RankVector& r, const GroupElement& G, const std::vector<OElem>& src,
         std::vector<OElem>& dst, std::vector<OElem>& tmp) {
  size_t off = 0;
  for (const auto& a : Q.arrows()) {
    int ri = r[static_cast<size_t>(a.src)], rj = r[static_cast<size_t>(a.dst)];
    const OMatrix& gj = G.g[static_cast<size_t>(a.dst)];
    const OMatrix& hi = G.ginv[static_cast<size_t>(a.src)];
    tmp.assign(static_cast<size_t>(rj * ri), 0);
    for (int p = 0; p < rj; ++p)
      for (int k = 0; k < ri; ++k) {
        OElem x = src[off + static_cast<size_t>(p * ri + k)];
        if (!x) continue;
        for (int s = 0; s < ri; ++s) tmp[static_cast<size_t>(p * ri + s)] = R.add(tmp[static_cast<size_t>(p * ri + s)], R.mul(x, hi(k, s)));
      }
    for (int p = 0; p < rj; ++p)
      for (int s = 0; s < ri; ++s) {
        OElem acc = 0;
        for (int k = 0; k < rj; ++k) acc = R.add(acc, R.mul(gj(p, k), tmp[static_cast<size_t>(k * ri + s)]));
        dst[off + static_cast<size_t>(p * ri + s)] = acc;
      }
    off += static_cast<size_t>(rj * ri);
  }
}

std::vector<OElem> flatten(const RepPoint& p) {
  std::vector<OElem> v;
  for (const auto& m : p.x) v.insert(v.end(), m.e.begin(), m.e.end());
  return v;
}

long euler_rr(const Quiver& Q, const RankVector& r) { return euler_form(Q, r, r); }

}  // namespace

// ---- representation space ----

RepSpace::RepSpace(const Quiver& Q, int alpha, const RankVector& r, int q, const BruteConfig& cfg)
    : Q_(Q), alpha_(alpha), q_(q), r_(r) {
  require_equal_multiplicities(Q);
  check_ranks(Q, r);
  R_ = ORing::make(q, alpha);
  for (const auto& a : Q.arrows()) entries_ += r[static_cast<size_t>(a.src)] * r[static_cast<size_t>(a.dst)];
  long double bits = static_cast<long double>(entries_) * std::log2(static_cast<long double>(R_->size()));
  if (bits > cfg.max_space_log2 + 1e-9)
    throw Error(ErrorKind::CapExceeded, "representation space of 2^" + std::to_string(static_cast<double>(bits)) +
                                            " points exceeds cap 2^" + std::to_string(cfg.max_space_log2));
  for (int k = 0; k < entries_; ++k) size_ *= R_->size();
}

RepPoint RepSpace::decode(std::uint64_t idx) const {
  RepPoint p;
  for (const auto& a : Q_.arrows()) {
    OMatrix m(r_[static_cast<size_t>(a.dst)], r_[static_cast<size_t>(a.src)]);
    for (auto& x : m.e) {
      x = static_cast<OElem>(idx % R_->size());
      idx /= R_->size();
    }
    p.x.push_back(std::move(m));
  }
  return p;
}

std::uint64_t RepSpace::encode(const RepPoint& p) const {
  std::uint64_t idx = 0;
  for (size_t a = p.x.size(); a-- > 0;)
    for (size_t k = p.x[a].e.size(); k-- > 0;) idx = idx * R_->size() + p.x[a].e[k];
  return idx;
}

OMatrix end_system(const ORing& R, const Quiver& Q, const RankVector& r, const RepPoint& p) {
  int n = Q.num_vertices();
  std::vector<int> voff(static_cast<size_t>(n + 1), 0);
  for (int i = 0; i < n; ++i) voff[static_cast<size_t>(i + 1)] = voff[static_cast<size_t>(i)] + r[static_cast<size_t>(i)] * r[static_cast<size_t>(i)];
  int rows = 0;
  for (const auto& a : Q.arrows()) rows += r[static_cast<size_t>(a.src)] * r[static_cast<size_t>(a.dst)];
  OMatrix A(rows, voff.back());
  int row = 0;
  for (int ai = 0; ai < Q.num_arrows(); ++ai) {
    const Arrow& a = Q.arrow(ai);
    int i = a.src, j = a.dst, ri = r[static_cast<size_t>(i)], rj = r[static_cast<size_t>(j)];
    const OMatrix& x = p.x[static_cast<size_t>(ai)];
    for (int pp = 0; pp < rj; ++pp)
      for (int s = 0; s < ri; ++s, ++row) {
        // (xi_j x)[pp][s] = sum_k xi_j[pp][k] x[k][s]
        for (int k = 0; k < rj; ++k) {
          int col = voff[static_cast<size_t>(j)] + pp * rj + k;
          A(row, col) = R.add(A(row, col), x(k, s));
        }
        // (x xi_i)[pp][s] = sum_k x[pp][k] xi_i[k][s]
        for (int k = 0; k < ri; ++k) {
          int col = voff[static_cast<size_t>(i)] + k * ri + s;
          A(row, col) = R.sub(A(row, col), x(pp, k));
        }
      }
  }
  return A;
}

OMatrix moment_system(const ORing& R, const Quiver& Q, const RankVector& r, const RepPoint& p) {
  int n = Q.num_vertices();
  std::vector<int> voff(static_cast<size_t>(n + 1), 0);
  for (int i = 0; i < n; ++i) voff[static_cast<size_t>(i + 1)] = voff[static_cast<size_t>(i)] + r[static_cast<size_t>(i)] * r[static_cast<size_t>(i)];
  int cols = 0;
  for (const auto& a : Q.arrows()) cols += r[static_cast<size_t>(a.src)] * r[static_cast<size_t>(a.dst)];
  OMatrix A(voff.back(), cols);
  int coff = 0;
  for (int ai = 0; ai < Q.num_arrows(); ++ai) {
    const Arrow& a = Q.arrow(ai);
    int i = a.src, j = a.dst, ri = r[static_cast<size_t>(i)], rj = r[static_cast<size_t>(j)];
    const OMatrix& x = p.x[static_cast<size_t>(ai)];  // rj x ri; y_a is ri x rj
    // mu_j += x y: [pp][s] = sum_k x[pp][k] y[k][s]
    for (int pp = 0; pp < rj; ++pp)
      for (int s = 0; s < rj; ++s)
        for (int k = 0; k < ri; ++k) {
          int row = voff[static_cast<size_t>(j)] + pp * rj + s, col = coff + k * rj + s;
          A(row, col) = R.add(A(row, col), x(pp, k));
        }
    // mu_i -= y x: [pp][s] = sum_k y[pp][k] x[k][s]
    for (int pp = 0; pp < ri; ++pp)
      for (int s = 0; s < ri; ++s)
        for (int k = 0; k < rj; ++k) {
          int row = voff[static_cast<size_t>(i)] + pp * ri + s, col = coff + pp * rj + k;
          A(row, col) = R.sub(A(row, col), x(k, s));
        }
    coff += ri * rj;
  }
  return A;
}

// ---- orbits ----

std::vector<OrbitRecord> enumerate_orbits(const Quiver& Q, int alpha, const RankVector& r, int q, const BruteConfig& cfg) {
  RepSpace S(Q, alpha, r, q, cfg);
  const ORing& R = S.ring();
  GroupEnumerator G(R, r, cfg.max_group);
  std::vector<GroupElement> elems(static_cast<size_t>(G.size()));
  for (std::uint64_t k = 0; k < G.size(); ++k) G.get(k, elems[static_cast<size_t>(k)]);

  std::vector<std::uint64_t> seen((S.size() + 63) / 64, 0);
  auto test_set = [&](std::uint64_t i) {
    bool was = seen[i >> 6] >> (i & 63) & 1;
    seen[i >> 6] |= std::uint64_t(1) << (i & 63);
    return !was;
  };
  const Fq& F = R.field();
  std::vector<OrbitRecord> out;
  std::vector<OElem> img(static_cast<size_t>(S.num_entries())), tmp;
  std::uint64_t base = R.size();
  auto enc = [&](const std::vector<OElem>& v) {
    std::uint64_t idx = 0;
    for (size_t k = v.size(); k-- > 0;) idx = idx * base + v[k];
    return idx;
  };
  bool nonzero_rank = std::any_of(r.begin(), r.end(), [](int x) { return x > 0; });

  for (std::uint64_t idx = 0; idx < S.size(); ++idx) {
    if (seen[idx >> 6] >> (idx & 63) & 1) continue;
    OrbitRecord rec;
    rec.representative = S.decode(idx);
    std::vector<OElem> flat = flatten(rec.representative);
    std::uint64_t count = 0;
    for (const auto& g : elems) {
      act(R, Q, r, g, flat, img, tmp);
      count += test_set(enc(img));
    }
    rec.orbit_size = count;
    rec.aut_size = G.full_order() / Int(static_cast<unsigned long>(count));
    OMatrix E = end_system(R, Q, r, rec.representative);
    rec.end_exp = kernel_size(R, E);
    Int end_size = ipow(q, rec.end_exp);

    // ratio law: |Aut| = |End| (1 - q^-d)
    int ratio_d = 0;
    Int diff = end_size - rec.aut_size;
    if (nonzero_rank && diff > 0 && end_size % diff == 0) {
      Int qd = end_size / diff;
      int d = 0;
      while (qd % q == 0) {
        qd /= q;
        ++d;
      }
      if (qd == 1 && d >= 1) ratio_d = d;
    }

    if (nonzero_rank && rec.end_exp * std::log2(static_cast<double>(q)) <= cfg.locality_scan_log2 + 1e-9) {
      rec.locality_exhaustive = true;
      LinearSolution sol = solve_linear(R, E, std::vector<OElem>(static_cast<size_t>(E.rows), 0));
      bool local = true;
      Int units = 0;
      int n = Q.num_vertices();
      for_each_kernel_vector(R, sol, [&](const std::vector<OElem>& xi) {
        bool all_unit = true, all_nil = true;
        size_t off = 0;
        for (int i = 0; i < n; ++i) {
          int ri = r[static_cast<size_t>(i)];
          if (ri == 0) continue;
          std::vector<int> res(static_cast<size_t>(ri * ri));
          for (size_t k = 0; k < res.size(); ++k)
            res[k] = xi.empty() ? 0 : static_cast<int>(R.residue(xi[off + k]));
          off += res.size();
          if (fq_rank(F, res, ri) < ri) all_unit = false;
          if (!fq_nilpotent(F, res, ri)) all_nil = false;
        }
        if (all_unit) units += 1;
        if (!all_unit && !all_nil) local = false;
      });
      if (units != rec.aut_size)
        throw Error(ErrorKind::InvalidArgument, "internal: unit count " + units.get_str() + " differs from |Aut| " +
                                                    rec.aut_size.get_str());
      rec.indecomposable = local;
      if (local && ratio_d == 0)
        throw Error(ErrorKind::InvalidArgument, "internal: local End ring violates the ratio law");
    } else {
      rec.indecomposable = ratio_d > 0;
    }
    rec.top_degree = rec.indecomposable ? ratio_d : 0;
    rec.absolutely_indecomposable = rec.indecomposable && rec.top_degree == 1;
    out.push_back(std::move(rec));
  }
  return out;
}

long count_abs_indecomposable(const Quiver& Q, int alpha, const RankVector& r, int q, const BruteConfig& cfg) {
  long c = 0;
  for (const auto& o : enumerate_orbits(Q, alpha, r, q, cfg)) c += o.absolutely_indecomposable;
  return c;
}

Int count_iso_classes(const Quiver& Q, int alpha, const RankVector& r, int q, const BruteConfig& cfg) {
  RepSpace S(Q, alpha, r, q, cfg);
  const ORing& R = S.ring();
  GroupEnumerator G(R, r, cfg.max_group);
  Int total = parallel_sum(G.size(), cfg.jobs, [&](std::uint64_t start, std::uint64_t step, std::uint64_t n) {
    Int s = 0;
    GroupElement g;
    for (std::uint64_t k = start; k < n; k += step) {
      G.get(k, g);
      long e = 0;
      for (const auto& a : Q.arrows()) {
        int ri = r[static_cast<size_t>(a.src)], rj = r[static_cast<size_t>(a.dst)];
        if (ri == 0 || rj == 0) continue;
        // x |-> g_j x - x g_i on rj x ri matrices, entries row-major
        OMatrix L(rj * ri, rj * ri);
        const OMatrix& gj = g.g[static_cast<size_t>(a.dst)];
        const OMatrix& gi = g.g[static_cast<size_t>(a.src)];
        for (int p = 0; p < rj; ++p)
          for (int c = 0; c < ri; ++c) {
            int row = p * ri + c;
            for (int k = 0; k < rj; ++k) L(row, k * ri + c) = R.add(L(row, k * ri + c), gj(p, k));
            for (int k = 0; k < ri; ++k) L(row, p * ri + k) = R.sub(L(row, p * ri + k), gi(k, c));
          }
        e += kernel_size(R, L);
      }
      s += ipow(q, e);
    }
    return s;
  });
  Int gs = static_cast<unsigned long>(G.size());
  if (total % gs != 0) throw Error(ErrorKind::InvalidArgument, "internal: Burnside sum not divisible by |G|");
  return total / gs;
}

// ---- moment map fibers ----

bool is_generic(const std::vector<int>& lambda, const RankVector& r) {
  if (lambda.size() != r.size()) return false;
  long tot = 0;
  for (size_t i = 0; i < r.size(); ++i) tot += static_cast<long>(lambda[i]) * r[i];
  if (tot != 0) return false;
  RankVector s(r.size(), 0);
  while (true) {
    size_t i = 0;
    while (i < s.size() && s[i] == r[i]) s[i++] = 0;
    if (i == s.size()) break;
    ++s[i];
    if (s == r) continue;
    long v = 0;
    for (size_t k = 0; k < r.size(); ++k) v += static_cast<long>(lambda[k]) * s[k];
    if (v == 0) return false;
  }
  return true;
}

namespace {

std::vector<OElem> lambda_rhs(const ORing& R, const RankVector& r, const std::vector<int>& lambda) {
  std::vector<OElem> b;
  int p = R.field().p();
  for (size_t i = 0; i < r.size(); ++i) {
    int c = ((lambda[i] % p) + p) % p;
    OElem v = R.mul(static_cast<OElem>(c), R.t_pow(R.alpha() - 1));
    for (int a = 0; a < r[i]; ++a)
      for (int s = 0; s < r[i]; ++s) b.push_back(a == s ? v : 0);
  }
  return b;
}

}  // namespace

Int moment_fiber_count(const Quiver& Q, int alpha, const RankVector& r, int q, const std::vector<int>& lambda,
                       FiberMethod method, const BruteConfig& cfg) {
  require_equal_multiplicities(Q);
  check_ranks(Q, r);
  bool deformed = std::any_of(lambda.begin(), lambda.end(), [](int x) { return x != 0; });
  if (deformed) {
    if (lambda.size() != r.size()) throw Error(ErrorKind::DimensionMismatch, "lambda length");
    long dot = 0, bound = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      dot += static_cast<long>(lambda[i]) * r[i];
      bound += static_cast<long>(std::abs(lambda[i])) * r[i];
    }
    if (dot != 0) throw Error(ErrorKind::NonGenericLambda, "lambda . r = " + std::to_string(dot));
    if (Fq::get(q).p() <= bound)
      throw Error(ErrorKind::CharacteristicTooSmall,
                  "characteristic " + std::to_string(Fq::get(q).p()) + " <= " + std::to_string(bound));
    if (method == FiberMethod::EndFormula)
      throw Error(ErrorKind::InvalidArgument, "the End formula applies to the zero fiber only");
  }
  RepSpace S(Q, alpha, r, q, cfg);
  const ORing& R = S.ring();

  if (method == FiberMethod::EndFormula) {
    long rr = euler_rr(Q, r);
    Int s = 0;
    for (const auto& o : enumerate_orbits(Q, alpha, r, q, cfg))
      s += Int(static_cast<unsigned long>(o.orbit_size)) * ipow(q, o.end_exp - alpha * rr);
    return s;
  }

  if (method == FiberMethod::Naive) {
    // y lives in a space of the same size as x
    if (2 * std::log2(static_cast<double>(S.size())) > cfg.max_space_log2 + 1e-9)
      throw Error(ErrorKind::CapExceeded, "pair space exceeds cap");
    std::vector<OElem> target = deformed ? lambda_rhs(R, r, lambda) : std::vector<OElem>();
    int n = Q.num_vertices();
    return parallel_sum(S.size(), cfg.jobs, [&](std::uint64_t start, std::uint64_t step, std::uint64_t N) {
      Int s = 0;
      for (std::uint64_t xi = start; xi < N; xi += step) {
        RepPoint x = S.decode(xi);
        for (std::uint64_t yi = 0; yi < N; ++yi) {
          RepPoint yr = S.decode(yi);  // y_a read with shape r_src x r_dst below
          std::vector<OMatrix> mu;
          for (int i = 0; i < n; ++i) mu.emplace_back(r[static_cast<size_t>(i)], r[static_cast<size_t>(i)]);
          for (int ai = 0; ai < Q.num_arrows(); ++ai) {
            const Arrow& a = Q.arrow(ai);
            OMatrix y(r[static_cast<size_t>(a.src)], r[static_cast<size_t>(a.dst)]);
            y.e = yr.x[static_cast<size_t>(ai)].e;
            const OMatrix& xa = x.x[static_cast<size_t>(ai)];
            mu[static_cast<size_t>(a.dst)] = mat_add(R, mu[static_cast<size_t>(a.dst)], mat_mul(R, xa, y));
            mu[static_cast<size_t>(a.src)] = mat_sub(R, mu[static_cast<size_t>(a.src)], mat_mul(R, y, xa));
          }
          std::vector<OElem> flat;
          for (const auto& m : mu) flat.insert(flat.end(), m.e.begin(), m.e.end());
          bool hit = deformed ? flat == target : std::all_of(flat.begin(), flat.end(), [](OElem v) { return v == 0; });
          if (hit) s += 1;
        }
      }
      return s;
    });
  }

  std::vector<OElem> rhs = deformed ? lambda_rhs(R, r, lambda) : std::vector<OElem>();
  return parallel_sum(S.size(), cfg.jobs, [&](std::uint64_t start, std::uint64_t step, std::uint64_t N) {
    Int s = 0;
    for (std::uint64_t xi = start; xi < N; xi += step) {
      OMatrix M = moment_system(R, Q, r, S.decode(xi));
      if (!deformed) {
        s += ipow(q, kernel_size(R, M));
      } else {
        LinearSolution sol = solve_linear(R, M, rhs);
        if (sol.solvable) s += ipow(q, sol.kernel_exp);
      }
    }
    return s;
  });
}

std::vector<Int> jet_counts(const Quiver& Q, const RankVector& d, int q, int n_max, const BruteConfig& cfg) {
  std::vector<Int> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(moment_fiber_count(Q, n, d, q, {}, FiberMethod::DirectKernel, cfg));
  return out;
}

// ---- average size of kernels ----

std::vector<Rat> ask_counts(const LinearFamily& theta, int q, int n_max, const BruteConfig& cfg) {
  for (const auto& B : theta.basis)
    if (static_cast<int>(B.size()) != theta.rows * theta.cols)
      throw Error(ErrorKind::DimensionMismatch, "basis matrix size");
  std::vector<Rat> out;
  size_t m = theta.basis.size();
  for (int n = 1; n <= n_max; ++n) {
    auto R = ORing::make(q, n);
    double bits = static_cast<double>(m) * std::log2(static_cast<double>(R->size()));
    if (bits > cfg.max_space_log2 + 1e-9) throw Error(ErrorKind::CapExceeded, "parameter space exceeds cap");
    std::uint64_t N = 1;
    for (size_t k = 0; k < m; ++k) N *= R->size();
    int p = R->field().p();
    std::vector<std::vector<OElem>> cst(m);
    for (size_t k = 0; k < m; ++k)
      for (long c : theta.basis[k]) cst[k].push_back(static_cast<OElem>(((c % p) + p) % p));
    Int total = parallel_sum(N, cfg.jobs, [&](std::uint64_t start, std::uint64_t step, std::uint64_t NN) {
      Int s = 0;
      for (std::uint64_t idx = start; idx < NN; idx += step) {
        OMatrix M(theta.rows, theta.cols);
        std::uint64_t v = idx;
        for (size_t k = 0; k < m; ++k) {
          OElem a = static_cast<OElem>(v % R->size());
          v /= R->size();
          if (!a) continue;
          for (size_t e = 0; e < M.e.size(); ++e) M.e[e] = R->add(M.e[e], R->mul(a, cst[k][e]));
        }
        s += ipow(q, kernel_size(*R, M));
      }
      return s;
    });
    out.push_back(Rat(total) / Rat(ipow(q, static_cast<long>(n) * static_cast<long>(m))));
    out.back().canonicalize();
  }
  return out;
}

}  // namespace kacq
