#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "kacq/errors.hpp"
#include "kacq/ratfunc.hpp"
#include "kacq/volume.hpp"

namespace kacq {

template <class C>
struct CoeffOps;

template <>
struct CoeffOps<RationalFunction> {
  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() { return RationalFunction(1); }
  static bool is_zero(const RationalFunction& c) { return c.is_zero(); }
  static bool is_one(const RationalFunction& c) { return c == RationalFunction(1); }
  static RationalFunction adams(const RationalFunction& c, long m) { return kacq::adams(c, m); }
  static RationalFunction scale(const RationalFunction& c, const Rat& s) { return c * RationalFunction(s); }
};

template <>
struct CoeffOps<VolumeSequence> {
  static VolumeSequence zero() { return VolumeSequence(); }
  static VolumeSequence one() { return VolumeSequence(Rat(1)); }
  static bool is_zero(const VolumeSequence& c) { return c.is_zero(); }
  static bool is_one(const VolumeSequence& c) { return c == VolumeSequence(Rat(1)); }
  static VolumeSequence adams(const VolumeSequence& c, long m) { return c.adams(m); }
  static VolumeSequence scale(const VolumeSequence& c, const Rat& s) { return c.scaled(s); }
};

long moebius(long n);

// Multivariate series in t_1..t_k truncated to the box r <= bound.
template <class C>
class Series {
 public:
  using Ops = CoeffOps<C>;
  using Exp = std::vector<int>;

  Series() = default;
  explicit Series(Exp bound) : bound_(std::move(bound)) {
    size_t n = 1;
    for (int b : bound_) {
      if (b < 0) throw Error(ErrorKind::InvalidArgument, "negative series bound");
      n *= static_cast<size_t>(b + 1);
    }
    c_.assign(n, Ops::zero());
  }
  static Series one(const Exp& bound) {
    Series s(bound);
    s.c_[0] = Ops::one();
    return s;
  }
  static Series monomial(const Exp& bound, const Exp& r, const C& c) {
    Series s(bound);
    s.set(r, c);
    return s;
  }

  const Exp& bound() const { return bound_; }
  size_t nvars() const { return bound_.size(); }
  size_t size() const { return c_.size(); }

  bool in_box(const Exp& r) const {
    if (r.size() != bound_.size()) return false;
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] < 0 || r[i] > bound_[i]) return false;
    return true;
  }
  size_t index(const Exp& r) const {
    size_t idx = 0;
    for (size_t i = r.size(); i-- > 0;) idx = idx * static_cast<size_t>(bound_[i] + 1) + static_cast<size_t>(r[i]);
    return idx;
  }
  Exp exponent(size_t idx) const {
    Exp r(bound_.size());
    for (size_t i = 0; i < bound_.size(); ++i) {
      size_t rad = static_cast<size_t>(bound_[i] + 1);
      r[i] = static_cast<int>(idx % rad);
      idx /= rad;
    }
    return r;
  }

  const C& coeff(const Exp& r) const {
    if (!in_box(r)) throw Error(ErrorKind::InvalidArgument, "exponent outside series bound");
    return c_[index(r)];
  }
  const C& at(size_t idx) const { return c_[idx]; }
  void set(const Exp& r, const C& c) {
    if (!in_box(r)) throw Error(ErrorKind::InvalidArgument, "exponent outside series bound");
    c_[index(r)] = c;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = Ops::zero() - x;
    return r;
  }
  friend Series operator+(const Series& a, const Series& b) {
    a.check(b);
    Series r = a;
    for (size_t i = 0; i < r.c_.size(); ++i)
      if (!Ops::is_zero(b.c_[i])) r.c_[i] = r.c_[i] + b.c_[i];
    return r;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    a.check(b);
    Series r(a.bound_);
    std::vector<size_t> nb;
    std::vector<Exp> eb;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (!Ops::is_zero(b.c_[j])) {
        nb.push_back(j);
        eb.push_back(b.exponent(j));
      }
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (Ops::is_zero(a.c_[i])) continue;
      Exp ea = a.exponent(i);
      for (size_t k = 0; k < nb.size(); ++k) {
        Exp s = ea;
        bool ok = true;
        for (size_t v = 0; v < s.size() && ok; ++v) {
          s[v] += eb[k][v];
          ok = s[v] <= a.bound_[v];
        }
        if (!ok) continue;
        size_t idx = r.index(s);
        r.c_[idx] = r.c_[idx] + a.c_[i] * b.c_[nb[k]];
      }
    }
    return r;
  }
  Series scaled(const Rat& s) const {
    Series r = *this;
    for (auto& x : r.c_)
      if (!Ops::is_zero(x)) x = Ops::scale(x, s);
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.bound_ == b.bound_ && a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // psi_m: coefficients by CoeffOps::adams, t^r -> t^{mr}, images outside the box dropped
  Series adams(long m) const {
    Series r(bound_);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (Ops::is_zero(c_[i])) continue;
      Exp e = exponent(i);
      bool ok = true;
      for (size_t v = 0; v < e.size() && ok; ++v) {
        e[v] *= static_cast<int>(m);
        ok = e[v] <= bound_[v];
      }
      if (ok) r.c_[r.index(e)] = Ops::adams(c_[i], m);
    }
    return r;
  }

  bool constant_is_zero() const { return Ops::is_zero(c_[0]); }
  bool constant_is_one() const { return Ops::is_one(c_[0]); }

  int total_bound() const {
    int d = 0;
    for (int b : bound_) d += b;
    return d;
  }
  int max_bound() const {
    int d = 0;
    for (int b : bound_) d = std::max(d, b);
    return d;
  }

  // exp of a series with zero constant term
  Series exp() const {
    if (!constant_is_zero()) throw Error(ErrorKind::NonzeroConstantTerm, "exp needs zero constant term");
    Series result = one(bound_), term = one(bound_);
    for (int k = 1; k <= total_bound(); ++k) {
      term = (term * *this).scaled(ratio(1, k));
      result = result + term;
    }
    return result;
  }
  // log of a series with constant term 1
  Series log() const {
    if (!constant_is_one()) throw Error(ErrorKind::ConstantTermNotOne, "log needs constant term 1");
    Series h = *this - one(bound_);
    Series result(bound_), power = one(bound_);
    for (int k = 1; k <= total_bound(); ++k) {
      power = power * h;
      result = result + power.scaled(ratio(k % 2 ? 1 : -1, k));
    }
    return result;
  }

 private:
  void check(const Series& o) const {
    if (bound_ != o.bound_) throw Error(ErrorKind::DimensionMismatch, "series bounds differ");
  }
  Exp bound_;
  std::vector<C> c_;
};

template <class C>
Series<C> plethystic_exp(const Series<C>& f) {
  if (!f.constant_is_zero()) throw Error(ErrorKind::NonzeroConstantTerm, "plethystic_exp needs zero constant term");
  Series<C> l(f.bound());
  for (long m = 1; m <= f.max_bound(); ++m) l = l + f.adams(m).scaled(ratio(1, m));
  return l.exp();
}

template <class C>
Series<C> plethystic_log(const Series<C>& g) {
  if (!g.constant_is_one()) throw Error(ErrorKind::ConstantTermNotOne, "plethystic_log needs constant term 1");
  Series<C> lg = g.log();
  Series<C> f(g.bound());
  for (long m = 1; m <= g.max_bound(); ++m) {
    long mu = moebius(m);
    if (mu != 0) f = f + lg.adams(m).scaled(ratio(mu, m));
  }
  return f;
}

using TruncatedSeries = Series<RationalFunction>;

std::string series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

}  // namespace kacq
