#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace kacq {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat ratio(long n, long d) {
  Rat r{Int(n), Int(d)};
  r.canonicalize();
  return r;
}

// Laurent polynomial in q with rational coefficients.
// Stored densely from the lowest exponent; no leading or trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) : QPoly(Rat(c)) {}
  QPoly(const Rat& c);

  static QPoly monomial(const Rat& c, long e);
  static QPoly q(long e = 1) { return monomial(Rat(1), e); }
  // coeffs[i] is the coefficient of q^(low + i)
  static QPoly from_dense(std::vector<Rat> coeffs, long low = 0);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return is_zero() || (c_.size() == 1 && low_ == 0); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  long degree() const { return is_zero() ? -1 : high(); }
  Rat coeff(long e) const;
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
  const std::vector<Rat>& dense() const { return c_; }
  // (exponent, coefficient) pairs, decreasing exponent
  std::vector<std::pair<long, Rat>> terms() const;
  bool integral() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rat& c);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly shift(long k) const;
  QPoly subst_power(long m) const;  // q -> q^m, m >= 1
  QPoly pow(unsigned n) const;
  Rat eval(const Rat& x) const;

  // "q^7 + q^6 + 3q^5" when spaced, "q^2+4q+1" otherwise
  std::string str(bool spaced = true) const;

 private:
  void trim();
  long low_ = 0;
  std::vector<Rat> c_;
};

QPoly parse_qpoly(const std::string& s);

// Integer polynomial helpers used for gcd and normalisation.
namespace zpoly {
using ZPoly = std::vector<Int>;  // index = degree, no trailing zeros

Int content(const ZPoly& a);
ZPoly primitive(const ZPoly& a);
ZPoly gcd(const ZPoly& a, const ZPoly& b);  // primitive, positive leading coefficient
bool divides(const ZPoly& a, const ZPoly& b, ZPoly* quot);  // b | a exactly over Z
ZPoly mul(const ZPoly& a, const ZPoly& b);
}  // namespace zpoly

// Split an ordinary polynomial (low() >= 0 not required) into rational content
// times primitive integer polynomial; exponent offset is returned separately.
void split_content(const QPoly& p, Rat* content, zpoly::ZPoly* prim, long* low);
QPoly from_zpoly(const zpoly::ZPoly& z, long low = 0);

}  // namespace kacq
