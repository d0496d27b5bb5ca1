#include "kacq/finitering.hpp"

#include <map>
#include <mutex>

#include "kacq/errors.hpp"

namespace kacq {

namespace {

// fixed irreducible moduli, constant term first, monic
std::vector<int> modulus_for(int p, int k) {
  if (k == 1) return {0, 1};
  switch (p) {
    case 2: return {1, 1, 1};  // x^2 + x + 1
    case 3: return {1, 0, 1};  // x^2 + 1
    case 5: return {2, 0, 1};  // x^2 + 2
    case 7: return {1, 0, 1};  // x^2 + 1
  }
  return {};
}

}  // namespace

bool supported_q(int q) {
  for (int p : {2, 3, 5, 7})
    if (q == p || q == p * p) return true;
  return false;
}

const Fq& Fq::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Fq>> cache;
  if (!supported_q(q)) throw Error(ErrorKind::UnsupportedField, "q = " + std::to_string(q) + " not in {2,3,4,5,7,9,25,49}");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot.reset(new Fq(q));
  return *slot;
}

Fq::Fq(int q) : q_(q) {
  for (int p : {2, 3, 5, 7}) {
    if (q == p) p_ = p, k_ = 1;
    if (q == p * p) p_ = p, k_ = 2;
  }
  modulus_ = modulus_for(p_, k_);
  auto digits = [&](int a) {
    std::vector<int> d(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i, a /= p_) d[static_cast<size_t>(i)] = a % p_;
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<size_t>(i)];
    return a;
  };
  size_t n = static_cast<size_t>(q_);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<int> dn(static_cast<size_t>(k_));
    for (int i = 0; i < k_; ++i) dn[static_cast<size_t>(i)] = (p_ - da[static_cast<size_t>(i)]) % p_;
    neg_[static_cast<size_t>(a)] = static_cast<std::uint8_t>(pack(dn));
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<int> s(static_cast<size_t>(k_));
      for (int i = 0; i < k_; ++i) s[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
      add_[static_cast<size_t>(a * q_ + b)] = static_cast<std::uint8_t>(pack(s));
      std::vector<int> prod(static_cast<size_t>(2 * k_ - 1), 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
          prod[static_cast<size_t>(i + j)] = (prod[static_cast<size_t>(i + j)] + da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p_;
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        int c = prod[static_cast<size_t>(d)];
        if (!c) continue;
        for (int i = 0; i <= k_; ++i) {
          size_t idx = static_cast<size_t>(d - k_ + i);
          prod[idx] = ((prod[idx] - c * modulus_[static_cast<size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<size_t>(k_));
      mul_[static_cast<size_t>(a * q_ + b)] = static_cast<std::uint8_t>(pack(prod));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[static_cast<size_t>(a)] = static_cast<std::uint8_t>(b);
}

int Fq::inv(int a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero in F_q");
  return inv_[static_cast<size_t>(a)];
}

std::shared_ptr<const ORing> ORing::make(int q, int alpha) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ORing>> cache;
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{q, alpha}];
  if (!slot) slot.reset(new ORing(q, alpha));
  return slot;
}

ORing::ORing(int q, int alpha) : F_(&Fq::get(q)), alpha_(alpha) {
  std::uint64_t s = 1;
  for (int i = 0; i < alpha; ++i) {
    pow_.push_back(static_cast<OElem>(s));
    s *= static_cast<std::uint64_t>(q);
    if (s > (1u << 30)) throw Error(ErrorKind::CapExceeded, "O_alpha too large");
  }
  pow_.push_back(static_cast<OElem>(s));
  size_ = static_cast<std::uint32_t>(s);
  if (size_ <= (1u << 22)) {
    neg_.resize(size_);
    for (OElem a = 0; a < size_; ++a) neg_[a] = slow_neg(a);
  }
  if (size_ <= 2401) {
    add_.resize(static_cast<size_t>(size_) * size_);
    mul_.resize(static_cast<size_t>(size_) * size_);
    for (OElem a = 0; a < size_; ++a)
      for (OElem b = 0; b < size_; ++b) {
        add_[a * size_ + b] = static_cast<std::uint16_t>(slow_add(a, b));
        mul_[a * size_ + b] = static_cast<std::uint16_t>(slow_mul(a, b));
      }
    tab_ = true;
    inv_.assign(size_, 0);
    for (OElem a = 0; a < size_; ++a)
      if (is_unit(a)) {
        OElem x = static_cast<OElem>(F_->inv(static_cast<int>(a % static_cast<OElem>(q))));
        for (int it = 0; it < alpha_; ++it) x = mul(x, sub(add(1, 1), mul(a, x)));
        inv_[a] = x;
      }
  }
}

OElem ORing::slow_add(OElem a, OElem b) const {
  OElem r = 0;
  OElem qq = static_cast<OElem>(q());
  for (int i = alpha_ - 1; i >= 0; --i) {
    OElem da = a / pow_[static_cast<size_t>(i)] % qq, db = b / pow_[static_cast<size_t>(i)] % qq;
    r = r * qq + static_cast<OElem>(F_->add(static_cast<int>(da), static_cast<int>(db)));
  }
  return r;
}

OElem ORing::slow_mul(OElem a, OElem b) const {
  std::vector<int> da = coeffs(a), db = coeffs(b), r(static_cast<size_t>(alpha_), 0);
  for (int i = 0; i < alpha_; ++i) {
    if (!da[static_cast<size_t>(i)]) continue;
    for (int j = 0; i + j < alpha_; ++j)
      r[static_cast<size_t>(i + j)] = F_->add(r[static_cast<size_t>(i + j)], F_->mul(da[static_cast<size_t>(i)], db[static_cast<size_t>(j)]));
  }
  return from_coeffs(r);
}

OElem ORing::slow_neg(OElem a) const {
  std::vector<int> d = coeffs(a);
  for (auto& x : d) x = F_->neg(x);
  return from_coeffs(d);
}

int ORing::val(OElem a) const {
  if (a == 0) return alpha_;
  int v = 0;
  OElem qq = static_cast<OElem>(q());
  while (a % qq == 0) {
    a /= qq;
    ++v;
  }
  return v;
}

OElem ORing::inv(OElem a) const {
  if (!is_unit(a)) throw Error(ErrorKind::InvalidArgument, "inverse of non-unit in O_alpha");
  if (tab_) return inv_[a];
  OElem x = static_cast<OElem>(F_->inv(static_cast<int>(residue(a))));
  OElem two = add(1, 1);
  for (int it = 0; it < alpha_; ++it) x = mul(x, sub(two, mul(a, x)));
  return x;
}

OElem ORing::from_coeffs(const std::vector<int>& c) const {
  OElem r = 0;
  for (int i = alpha_ - 1; i >= 0; --i) {
    int d = i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : 0;
    r = r * static_cast<OElem>(q()) + static_cast<OElem>(d);
  }
  return r;
}

std::vector<int> ORing::coeffs(OElem a) const {
  std::vector<int> d(static_cast<size_t>(alpha_));
  for (int i = 0; i < alpha_; ++i, a /= static_cast<OElem>(q())) d[static_cast<size_t>(i)] = static_cast<int>(a % static_cast<OElem>(q()));
  return d;
}

std::string ORing::str(OElem a) const {
  if (a == 0) return "0";
  std::string s;
  auto d = coeffs(a);
  for (int i = 0; i < alpha_; ++i) {
    if (!d[static_cast<size_t>(i)]) continue;
    if (!s.empty()) s += "+";
    std::string c = F_->k() == 1 ? std::to_string(d[static_cast<size_t>(i)]) : "[" + std::to_string(d[static_cast<size_t>(i)]) + "]";
    if (i == 0)
      s += c;
    else
      s += (d[static_cast<size_t>(i)] == 1 ? "" : c) + (i == 1 ? "t" : "t^" + std::to_string(i));
  }
  return s;
}

OMatrix OMatrix::identity(int n) {
  OMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

OMatrix mat_mul(const ORing& R, const OMatrix& A, const OMatrix& B) {
  if (A.cols != B.rows) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  OMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      OElem a = A(i, k);
      if (!a) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) = R.add(C(i, j), R.mul(a, B(k, j)));
    }
  return C;
}

OMatrix mat_add(const ORing& R, const OMatrix& A, const OMatrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
  OMatrix C = A;
  for (size_t i = 0; i < C.e.size(); ++i) C.e[i] = R.add(A.e[i], B.e[i]);
  return C;
}

OMatrix mat_sub(const ORing& R, const OMatrix& A, const OMatrix& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw Error(ErrorKind::DimensionMismatch, "matrix difference shapes");
  OMatrix C = A;
  for (size_t i = 0; i < C.e.size(); ++i) C.e[i] = R.sub(A.e[i], B.e[i]);
  return C;
}

OMatrix mat_scale(const ORing& R, OElem c, const OMatrix& A) {
  OMatrix C = A;
  for (auto& x : C.e) x = R.mul(c, x);
  return C;
}

std::vector<OElem> mat_vec(const ORing& R, const OMatrix& A, const std::vector<OElem>& x) {
  if (static_cast<int>(x.size()) != A.cols) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  std::vector<OElem> y(static_cast<size_t>(A.rows), 0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[static_cast<size_t>(i)] = R.add(y[static_cast<size_t>(i)], R.mul(A(i, j), x[static_cast<size_t>(j)]));
  return y;
}

bool invertible(const ORing& R, const OMatrix& A) {
  if (A.rows != A.cols) return false;
  auto g = smith_invariants(R, A);
  for (int x : g)
    if (x != 0) return false;
  return true;
}

OMatrix mat_inverse(const ORing& R, const OMatrix& A0) {
  if (A0.rows != A0.cols) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  int n = A0.rows;
  OMatrix A = A0, B = OMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n && piv < 0; ++i)
      if (R.is_unit(A(i, k))) piv = i;
    if (piv < 0) throw Error(ErrorKind::InvalidArgument, "matrix not invertible over O_alpha");
    for (int j = 0; j < n; ++j) {
      std::swap(A(k, j), A(piv, j));
      std::swap(B(k, j), B(piv, j));
    }
    OElem u = R.inv(A(k, k));
    for (int j = 0; j < n; ++j) {
      A(k, j) = R.mul(u, A(k, j));
      B(k, j) = R.mul(u, B(k, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || !A(i, k)) continue;
      OElem c = A(i, k);
      for (int j = 0; j < n; ++j) {
        A(i, j) = R.sub(A(i, j), R.mul(c, A(k, j)));
        B(i, j) = R.sub(B(i, j), R.mul(c, B(k, j)));
      }
    }
  }
  return B;
}

std::string mat_str(const ORing& R, const OMatrix& A) {
  std::string s = "[";
  for (int i = 0; i < A.rows; ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < A.cols; ++j) s += (j ? ", " : "") + R.str(A(i, j));
    s += "]";
  }
  return s + "]";
}

namespace {

// Smith reduction; U and V are tracked only when requested.
std::vector<int> smith_core(const ORing& R, OMatrix A, OMatrix* U, OMatrix* V) {
  int m = A.rows, n = A.cols, r = std::min(m, n), alpha = R.alpha();
  std::vector<int> g(static_cast<size_t>(r), alpha);
  for (int k = 0; k < r; ++k) {
    int bi = -1, bj = -1, bv = alpha;
    for (int i = k; i < m && bv > 0; ++i)
      for (int j = k; j < n; ++j) {
        int v = R.val(A(i, j));
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (bv == alpha) break;
    if (bi != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(bi, j));
      if (U)
        for (int j = 0; j < m; ++j) std::swap((*U)(k, j), (*U)(bi, j));
    }
    if (bj != k) {
      for (int i = 0; i < m; ++i) std::swap(A(i, k), A(i, bj));
      if (V)
        for (int i = 0; i < n; ++i) std::swap((*V)(i, k), (*V)(i, bj));
    }
    OElem u = R.inv(R.shift_down(A(k, k), bv));
    for (int j = 0; j < n; ++j) A(k, j) = R.mul(u, A(k, j));
    if (U)
      for (int j = 0; j < m; ++j) (*U)(k, j) = R.mul(u, (*U)(k, j));
    for (int i = k + 1; i < m; ++i) {
      if (!A(i, k)) continue;
      OElem c = R.shift_down(A(i, k), bv);
      for (int j = k; j < n; ++j) A(i, j) = R.sub(A(i, j), R.mul(c, A(k, j)));
      if (U)
        for (int j = 0; j < m; ++j) (*U)(i, j) = R.sub((*U)(i, j), R.mul(c, (*U)(k, j)));
    }
    for (int j = k + 1; j < n; ++j) {
      if (!A(k, j)) continue;
      OElem c = R.shift_down(A(k, j), bv);
      A(k, j) = 0;
      if (V)
        for (int i = 0; i < n; ++i) (*V)(i, j) = R.sub((*V)(i, j), R.mul(c, (*V)(i, k)));
    }
    g[static_cast<size_t>(k)] = bv;
  }
  return g;
}

}  // namespace

SmithForm smith_normal_form(const ORing& R, const OMatrix& M) {
  SmithForm s;
  s.U = OMatrix::identity(M.rows);
  s.V = OMatrix::identity(M.cols);
  s.gammas = smith_core(R, M, &s.U, &s.V);
  return s;
}

std::vector<int> smith_invariants(const ORing& R, const OMatrix& M) { return smith_core(R, M, nullptr, nullptr); }

int kernel_size(const ORing& R, const OMatrix& M) {
  auto g = smith_invariants(R, M);
  int e = 0, r = 0;
  for (int x : g)
    if (x < R.alpha()) {
      e += x;
      ++r;
    }
  return e + R.alpha() * (M.cols - r);
}

LinearSolution solve_linear(const ORing& R, const OMatrix& A, const std::vector<OElem>& b) {
  if (static_cast<int>(b.size()) != A.rows) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  SmithForm s = smith_normal_form(R, A);
  std::vector<OElem> c = mat_vec(R, s.U, b);
  int alpha = R.alpha(), r = static_cast<int>(s.gammas.size());
  LinearSolution out;
  out.solvable = true;
  std::vector<OElem> y(static_cast<size_t>(A.cols), 0);
  for (int i = 0; i < A.rows; ++i) {
    int gi = i < r ? s.gammas[static_cast<size_t>(i)] : alpha;
    OElem ci = c[static_cast<size_t>(i)];
    if (R.val(ci) < gi) {
      out.solvable = false;
      break;
    }
    if (i < r && gi < alpha) y[static_cast<size_t>(i)] = R.shift_down(ci, gi);
  }
  for (int j = 0; j < A.cols; ++j) {
    int gj = j < r ? s.gammas[static_cast<size_t>(j)] : alpha;
    if (gj == 0) continue;
    out.kernel_exp += gj;
    std::vector<OElem> col(static_cast<size_t>(A.cols));
    OElem scale = R.t_pow(alpha - gj);
    for (int i = 0; i < A.cols; ++i) col[static_cast<size_t>(i)] = R.mul(scale, s.V(i, j));
    out.gens.push_back(std::move(col));
    out.gen_orders.push_back(gj);
  }
  if (out.solvable) out.particular = mat_vec(R, s.V, y);
  return out;
}

void for_each_kernel_vector(const ORing& R, const LinearSolution& s,
                            const std::function<void(const std::vector<OElem>&)>& f) {
  size_t n = s.gens.empty() ? 0 : s.gens[0].size();
  size_t k = s.gens.size();
  std::vector<OElem> z(k, 0), lim(k);
  for (size_t i = 0; i < k; ++i) lim[i] = R.t_pow(s.gen_orders[i]) ? R.t_pow(s.gen_orders[i]) : R.size();
  std::vector<OElem> v(n);
  while (true) {
    std::fill(v.begin(), v.end(), 0);
    for (size_t i = 0; i < k; ++i)
      if (z[i])
        for (size_t j = 0; j < n; ++j) v[j] = R.add(v[j], R.mul(z[i], s.gens[i][j]));
    f(v);
    size_t i = 0;
    while (i < k && ++z[i] == lim[i]) z[i++] = 0;
    if (i == k) break;
  }
}

Int gl_order(int q, int alpha, int r) {
  Int Q = q, res = 1;
  Int qr;
  mpz_pow_ui(qr.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(r));
  Int qi = 1;
  for (int i = 0; i < r; ++i) {
    res *= qr - qi;
    qi *= Q;
  }
  Int hi;
  mpz_pow_ui(hi.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>((alpha - 1) * r * r));
  return res * hi;
}

Int gl_order(int q, int alpha, const std::vector<int>& ranks) {
  Int res = 1;
  for (int r : ranks) res *= gl_order(q, alpha, r);
  return res;
}

std::vector<OMatrix> gl_enumerate(const ORing& R, int r, std::uint64_t cap) {
  Int order = gl_order(R.q(), R.alpha(), r);
  if (order > Int(static_cast<unsigned long>(cap)))
    throw Error(ErrorKind::CapExceeded, "|GL| = " + order.get_str() + " exceeds cap " + std::to_string(cap));
  std::vector<OMatrix> out;
  if (r == 0) {
    out.push_back(OMatrix(0, 0));
    return out;
  }
  size_t n = static_cast<size_t>(r * r);
  auto R1 = ORing::make(R.q(), 1);
  // residues invertible over F_q
  std::vector<OMatrix> residues;
  std::vector<OElem> digits(n, 0);
  while (true) {
    OMatrix m(r, r);
    m.e = digits;
    if (smith_invariants(*R1, m).back() == 0) residues.push_back(m);
    size_t i = 0;
    while (i < n && ++digits[i] == static_cast<OElem>(R.q())) digits[i++] = 0;
    if (i == n) break;
  }
  // higher parts: entries in t*O_alpha
  OElem hsize = R.size() / static_cast<OElem>(R.q());
  std::vector<OElem> hi(n, 0);
  while (true) {
    for (const auto& res : residues) {
      OMatrix m(r, r);
      for (size_t i = 0; i < n; ++i) m.e[i] = res.e[i] + hi[i] * static_cast<OElem>(R.q());
      out.push_back(std::move(m));
    }
    size_t i = 0;
    while (i < n && ++hi[i] == hsize) hi[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace kacq
