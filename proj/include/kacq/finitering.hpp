#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "kacq/qpoly.hpp"

namespace kacq {

// F_q for q = p^k, p in {2,3,5,7}, k in {1,2}. Elements are integers
// 0..q-1 read as base-p coefficient vectors modulo a fixed irreducible.
class Fq {
 public:
  static const Fq& get(int q);
  int q() const { return q_; }
  int p() const { return p_; }
  int k() const { return k_; }
  // monic modulus coefficients, constant term first (k = 1: x)
  const std::vector<int>& modulus() const { return modulus_; }
  int add(int a, int b) const { return add_[static_cast<size_t>(a * q_ + b)]; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a * q_ + b)]; }
  int neg(int a) const { return neg_[static_cast<size_t>(a)]; }
  int inv(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }

 private:
  explicit Fq(int q);
  int q_, p_, k_;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

bool supported_q(int q);

// O_alpha = F_q[t]/(t^alpha). An element is the integer sum c_i q^i with
// c_i the coefficient of t^i, so t^v is q^v and division by t^v is integer
// division by q^v.
using OElem = std::uint32_t;

class ORing {
 public:
  static std::shared_ptr<const ORing> make(int q, int alpha);
  const Fq& field() const { return *F_; }
  int q() const { return F_->q(); }
  int alpha() const { return alpha_; }
  std::uint32_t size() const { return size_; }

  OElem add(OElem a, OElem b) const { return tab_ ? add_[a * size_ + b] : slow_add(a, b); }
  OElem mul(OElem a, OElem b) const { return tab_ ? mul_[a * size_ + b] : slow_mul(a, b); }
  OElem neg(OElem a) const { return neg_.empty() ? slow_neg(a) : neg_[a]; }
  OElem sub(OElem a, OElem b) const { return add(a, neg(b)); }
  int val(OElem a) const;  // alpha for zero
  bool is_unit(OElem a) const { return a % static_cast<OElem>(q()) != 0; }
  OElem inv(OElem a) const;  // unit inverse
  OElem t_pow(int v) const { return v >= alpha_ ? 0 : pow_[static_cast<size_t>(v)]; }
  OElem shift_down(OElem a, int v) const { return a / pow_[static_cast<size_t>(v)]; }  // a / t^v when t^v | a
  OElem from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(OElem a) const;
  OElem residue(OElem a) const { return a % static_cast<OElem>(q()); }
  std::string str(OElem a) const;

 private:
  ORing(int q, int alpha);
  OElem slow_add(OElem a, OElem b) const;
  OElem slow_mul(OElem a, OElem b) const;
  OElem slow_neg(OElem a) const;
  const Fq* F_;
  int alpha_;
  std::uint32_t size_;
  bool tab_ = false;
  std::vector<OElem> pow_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<OElem> inv_, neg_;
};

using ORingPtr = std::shared_ptr<const ORing>;

struct OMatrix {
  int rows = 0, cols = 0;
  std::vector<OElem> e;
  OMatrix() = default;
  OMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r * c), 0) {}
  OElem& operator()(int i, int j) { return e[static_cast<size_t>(i * cols + j)]; }
  OElem operator()(int i, int j) const { return e[static_cast<size_t>(i * cols + j)]; }
  static OMatrix identity(int n);
  friend bool operator==(const OMatrix& a, const OMatrix& b) { return a.rows == b.rows && a.cols == b.cols && a.e == b.e; }
};

OMatrix mat_mul(const ORing& R, const OMatrix& A, const OMatrix& B);
OMatrix mat_add(const ORing& R, const OMatrix& A, const OMatrix& B);
OMatrix mat_sub(const ORing& R, const OMatrix& A, const OMatrix& B);
OMatrix mat_scale(const ORing& R, OElem c, const OMatrix& A);
std::vector<OElem> mat_vec(const ORing& R, const OMatrix& A, const std::vector<OElem>& x);
bool invertible(const ORing& R, const OMatrix& A);  // square, unit determinant
OMatrix mat_inverse(const ORing& R, const OMatrix& A);
std::string mat_str(const ORing& R, const OMatrix& A);

struct SmithForm {
  std::vector<int> gammas;  // weakly increasing, length min(rows, cols), alpha = zero
  OMatrix U, V;             // U * M * V = diag(t^gamma)
};

SmithForm smith_normal_form(const ORing& R, const OMatrix& M);
std::vector<int> smith_invariants(const ORing& R, const OMatrix& M);
// |Ker M| = q^e on O_alpha^cols
int kernel_size(const ORing& R, const OMatrix& M);

struct LinearSolution {
  bool solvable = false;
  int kernel_exp = 0;           // |Ker| = q^kernel_exp
  std::vector<OElem> particular;  // valid when solvable
  // kernel = { sum_i z_i * gens[i] : z_i in O, z_i determined mod t^{gen_orders[i]} }
  std::vector<std::vector<OElem>> gens;
  std::vector<int> gen_orders;
};

LinearSolution solve_linear(const ORing& R, const OMatrix& A, const std::vector<OElem>& b);
// calls f on each kernel vector; count is q^kernel_exp
void for_each_kernel_vector(const ORing& R, const LinearSolution& s,
                            const std::function<void(const std::vector<OElem>&)>& f);

Int gl_order(int q, int alpha, int r);
Int gl_order(int q, int alpha, const std::vector<int>& ranks);
std::vector<OMatrix> gl_enumerate(const ORing& R, int r, std::uint64_t cap = 100000);

}  // namespace kacq
