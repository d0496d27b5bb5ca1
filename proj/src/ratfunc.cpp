#include "kacq/ratfunc.hpp"

#include "kacq/errors.hpp"

namespace kacq {

using zpoly::ZPoly;

namespace {

ZPoly to_z(const QPoly& p) {
  ZPoly z(p.dense().size());
  for (size_t i = 0; i < z.size(); ++i) z[i] = p.dense()[i].get_num();
  return z;
}

}  // namespace

RationalFunction::RationalFunction(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (num.is_zero()) return;
  Rat cn, cd;
  ZPoly pn, pd;
  long ln, ld;
  split_content(num, &cn, &pn, &ln);
  split_content(den, &cd, &pd, &ld);
  ZPoly g = zpoly::gcd(pn, pd);
  if (g.size() > 1) {
    zpoly::divides(pn, g, &pn);
    zpoly::divides(pd, g, &pd);
  }
  Rat c = cn / cd;
  num_ = from_zpoly(pn, ln - ld) * c;
  den_ = from_zpoly(pd, 0);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  if (a.is_polynomial()) return RationalFunction(a.num_ * b.den_ + b.num_, b.den_);
  if (b.is_polynomial()) return RationalFunction(a.num_ + b.num_ * a.den_, a.den_);
  ZPoly da = to_z(a.den_), db = to_z(b.den_);
  ZPoly g = zpoly::gcd(da, db);
  ZPoly ca = da, cb = db;
  if (g.size() > 1) {
    zpoly::divides(da, g, &ca);
    zpoly::divides(db, g, &cb);
  }
  QPoly qa = from_zpoly(ca), qb = from_zpoly(cb);
  return RationalFunction(a.num_ * qb + b.num_ * qa, a.den_ * qb);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(RationalFunction::Raw{}, a.num_ * b.num_, QPoly(1));
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  return RationalFunction(Raw{}, num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str(false);
  return num_.str(false) + " / " + den_.str(false);
}

namespace {

int strip_factor(ZPoly& p, const ZPoly& f) {
  int k = 0;
  ZPoly qt;
  while (p.size() > 1 && zpoly::divides(p, f, &qt)) {
    p = qt;
    ++k;
  }
  return k;
}

std::string power_str(const std::string& base, int k) {
  if (k == 0) return "";
  return k == 1 ? base : base + "^" + std::to_string(k);
}

bool single_term(const QPoly& p) { return p.terms().size() <= 1; }

}  // namespace

std::string RationalFunction::pretty() const {
  if (is_zero()) return "0";
  // num_ = c * q^k * N
  Rat c;
  ZPoly n;
  long k;
  split_content(num_, &c, &n, &k);
  Int cn = c.get_num(), cd = c.get_den();
  QPoly top = from_zpoly(n, k > 0 ? k : 0) * Rat(cn);
  ZPoly rest = to_z(den_);
  int e_minus = strip_factor(rest, ZPoly{Int(-1), Int(1)});
  int e_plus = strip_factor(rest, ZPoly{Int(1), Int(1)});
  std::vector<std::string> factors;
  if (cd != 1) factors.push_back(cd.get_str());
  if (k < 0) factors.push_back(power_str("q", static_cast<int>(-k)));
  if (e_minus) factors.push_back(power_str("(q-1)", e_minus));
  if (e_plus) factors.push_back(power_str("(q+1)", e_plus));
  QPoly restp = from_zpoly(rest);
  if (restp != QPoly(1)) factors.push_back("(" + restp.str(false) + ")");
  std::string ts = top.str(false);
  if (factors.empty()) return ts;
  std::string bottom;
  for (auto& f : factors) bottom += f;
  if (factors.size() > 1) bottom = "(" + bottom + ")";
  if (!single_term(top)) ts = "(" + ts + ")";
  return ts + "/" + bottom;
}

Rat rf_eval(const RationalFunction& f, const Rat& q0) {
  Rat d = f.den().eval(q0);
  if (d == 0) throw Error(ErrorKind::PoleAtEvaluationPoint, "denominator vanishes at q = " + q0.get_str());
  return f.num().eval(q0) / d;
}

RationalFunction adams(const RationalFunction& f, long m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "Adams index must be positive");
  return RationalFunction(RationalFunction::Raw{}, f.num_.subst_power(m), f.den_.subst_power(m));
}

RationalFunction parse_rf(const std::string& s) {
  auto pos = s.find(" / ");
  if (pos == std::string::npos) return RationalFunction(parse_qpoly(s));
  return RationalFunction(parse_qpoly(s.substr(0, pos)), parse_qpoly(s.substr(pos + 3)));
}

}  // namespace kacq
