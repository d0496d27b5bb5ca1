#pragma once

#include <string>

#include "kacq/qpoly.hpp"

namespace kacq {

// Element of Q(q) kept in the form c * q^k * N(q) / D(q) with N(0), D(0) != 0,
// gcd(N, D) = 1 and D primitive over Z with positive leading coefficient.
// num() returns c * q^k * N (possibly Laurent), den() returns D.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c), den_(1) {}
  RationalFunction(const Rat& c) : num_(c), den_(1) {}
  RationalFunction(const QPoly& p) : num_(p), den_(1) {}
  RationalFunction(const QPoly& num, const QPoly& den);

  static RationalFunction q(long e = 1) { return RationalFunction(QPoly::q(e)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == QPoly(1); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction inverse() const;
  RationalFunction pow(long n) const;

  // canonical "num / den", compact polynomials, den omitted when 1
  std::string str() const;
  // factored denominator, e.g. "(q^2+4q+1)/(q-1)^2"
  std::string pretty() const;

 private:
  struct Raw {};
  RationalFunction(Raw, QPoly n, QPoly d) : num_(std::move(n)), den_(std::move(d)) {}
  friend RationalFunction adams(const RationalFunction& f, long m);
  QPoly num_;
  QPoly den_ = QPoly(1);
};

// num(q0)/den(q0); throws PoleAtEvaluationPoint
Rat rf_eval(const RationalFunction& f, const Rat& q0);
// q -> q^m
RationalFunction adams(const RationalFunction& f, long m);
RationalFunction parse_rf(const std::string& s);

}  // namespace kacq
