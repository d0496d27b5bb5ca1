#include "kacq/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "kacq/errors.hpp"

namespace kacq {

QPoly::QPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const Rat& c, long e) {
  QPoly p;
  if (c != 0) {
    p.low_ = e;
    p.c_.push_back(c);
  }
  return p;
}

QPoly QPoly::from_dense(std::vector<Rat> coeffs, long low) {
  QPoly p;
  p.c_ = std::move(coeffs);
  p.low_ = low;
  p.trim();
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    low_ += static_cast<long>(k);
  }
  if (c_.empty()) low_ = 0;
}

Rat QPoly::coeff(long e) const {
  if (is_zero() || e < low_ || e > high()) return Rat(0);
  return c_[static_cast<size_t>(e - low_)];
}

std::vector<std::pair<long, Rat>> QPoly::terms() const {
  std::vector<std::pair<long, Rat>> out;
  for (long i = static_cast<long>(c_.size()) - 1; i >= 0; --i)
    if (c_[static_cast<size_t>(i)] != 0) out.emplace_back(low_ + i, c_[static_cast<size_t>(i)]);
  return out;
}

bool QPoly::integral() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  std::vector<Rat> r(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(low_ - lo) + i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[static_cast<size_t>(o.low_ - lo) + i] += o.c_[i];
  c_ = std::move(r);
  low_ = lo;
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rat& c) {
  if (c == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  size_t n = a.c_.size(), m = b.c_.size();
  QPoly r;
  r.low_ = a.low_ + b.low_;
  if (a.integral() && b.integral()) {
    std::vector<Int> acc(n + m - 1);
    for (size_t i = 0; i < n; ++i) {
      const Int& x = a.c_[i].get_num();
      if (x == 0) continue;
      for (size_t j = 0; j < m; ++j) mpz_addmul(acc[i + j].get_mpz_t(), x.get_mpz_t(), b.c_[j].get_num().get_mpz_t());
    }
    r.c_.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r.c_[i] = Rat(acc[i]);
  } else {
    r.c_.assign(n + m - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

QPoly QPoly::shift(long k) const {
  QPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

QPoly QPoly::subst_power(long m) const {
  if (m == 1 || is_zero()) return *this;
  std::vector<Rat> r((c_.size() - 1) * static_cast<size_t>(m) + 1);
  for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(m)] = c_[i];
  return from_dense(std::move(r), low_ * m);
}

QPoly QPoly::pow(unsigned n) const {
  QPoly r(1), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Rat QPoly::eval(const Rat& x) const {
  if (is_zero()) return Rat(0);
  if (x == 0) {
    if (low_ < 0) throw Error(ErrorKind::PoleAtEvaluationPoint, "negative power of q at q = 0");
    return coeff(0);
  }
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  Rat xp = 1;
  long e = low_ < 0 ? -low_ : low_;
  for (long i = 0; i < e; ++i) xp *= x;
  return low_ < 0 ? Rat(acc / xp) : Rat(acc * xp);
}

namespace {

std::string coeff_prefix(const Rat& a, bool has_var) {
  if (!has_var) return a.get_str();
  if (a == 1) return "";
  if (a.get_den() == 1) return a.get_str();
  return "(" + a.get_str() + ")";
}

}  // namespace

std::string QPoly::str(bool spaced) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : terms()) {
    Rat a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) out += "-";
    } else {
      out += spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+");
    }
    first = false;
    std::string var = e == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
    out += coeff_prefix(a, !var.empty()) + var;
  }
  return out;
}

QPoly parse_qpoly(const std::string& src) {
  std::string s;
  for (char ch : src)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(ErrorKind::Parse, "empty polynomial");
  size_t i = 0;
  QPoly out;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::Parse, "polynomial '" + src + "': " + why);
  };
  auto read_int = [&](std::string& dst) {
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    dst = s.substr(st, i - st);
    return !dst.empty();
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected sign");
    }
    Rat coef = 1;
    bool have_coef = false;
    if (i < s.size() && s[i] == '(') {
      size_t close = s.find(')', i);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      try {
        coef = Rat(s.substr(i + 1, close - i - 1));
        coef.canonicalize();
      } catch (...) {
        fail("bad coefficient");
      }
      i = close + 1;
      have_coef = true;
    } else {
      std::string num, den;
      if (read_int(num)) {
        have_coef = true;
        coef = Rat(Int(num));
        if (i < s.size() && s[i] == '/') {
          ++i;
          if (!read_int(den)) fail("bad denominator");
          coef = Rat(Int(num), Int(den));
          coef.canonicalize();
        }
      }
    }
    if (i < s.size() && s[i] == '*') ++i;
    long e = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int es = 1;
        if (i < s.size() && s[i] == '-') {
          es = -1;
          ++i;
        }
        std::string d;
        if (!read_int(d)) fail("bad exponent");
        e = es * std::stol(d);
      }
    } else if (!have_coef) {
      fail("expected term");
    }
    out += QPoly::monomial(coef * sign, e);
  }
  return out;
}

namespace zpoly {

namespace {

void strip(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Int maxnorm(const ZPoly& a) {
  Int m = 0;
  for (const auto& x : a) {
    Int v = abs(x);
    if (v > m) m = v;
  }
  return m;
}

Int eval(const ZPoly& a, const Int& x) {
  Int acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

ZPoly normalise(ZPoly a) {
  strip(a);
  a = primitive(a);
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

// pseudo-remainder of a by b
ZPoly prem(ZPoly a, const ZPoly& b) {
  const Int& lb = b.back();
  size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Int la = a.back();
    size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    strip(a);
  }
  return a;
}

ZPoly prs_gcd(ZPoly a, ZPoly b) {
  a = normalise(a);
  b = normalise(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = normalise(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return normalise(a);
}

}  // namespace

Int content(const ZPoly& a) {
  Int g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& a) {
  Int g = content(a);
  if (g == 0 || g == 1) return a;
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  strip(r);
  return r;
}

bool divides(const ZPoly& a0, const ZPoly& b, ZPoly* quot) {
  if (b.empty()) return false;
  ZPoly a = a0;
  strip(a);
  if (a.empty()) {
    if (quot) quot->clear();
    return true;
  }
  if (a.size() < b.size()) return false;
  ZPoly q(a.size() - b.size() + 1);
  const Int& lb = b.back();
  while (a.size() >= b.size()) {
    Int c;
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) mpz_submul(a[shift + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
    strip(a);
  }
  if (!a.empty()) return false;
  if (quot) *quot = std::move(q);
  return true;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = normalise(a0), b = normalise(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() == 1 || b.size() == 1) return ZPoly{Int(1)};
  if (a == b) return a;
  Int xi = 2 * std::min(maxnorm(a), maxnorm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Int ha = eval(a, xi), hb = eval(b, xi), h;
    mpz_gcd(h.get_mpz_t(), ha.get_mpz_t(), hb.get_mpz_t());
    ZPoly g;
    Int half = xi / 2;
    while (h != 0) {
      Int d;
      mpz_fdiv_r(d.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (d > half) d -= xi;
      g.push_back(d);
      h = (h - d) / xi;
    }
    g = normalise(g);
    if (!g.empty() && divides(a, g, nullptr) && divides(b, g, nullptr)) return g;
    xi = xi * 73794 / 27011;
  }
  return prs_gcd(a, b);
}

}  // namespace zpoly

void split_content(const QPoly& p, Rat* content, zpoly::ZPoly* prim, long* low) {
  *low = p.low();
  prim->clear();
  if (p.is_zero()) {
    *content = 0;
    return;
  }
  Int l = 1;
  for (const auto& x : p.dense()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  zpoly::ZPoly z(p.dense().size());
  for (size_t i = 0; i < z.size(); ++i) z[i] = p.dense()[i].get_num() * (l / p.dense()[i].get_den());
  Int g = zpoly::content(z);
  if (z.back() < 0) g = -g;
  for (auto& x : z) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  *prim = std::move(z);
  *content = Rat(g, l);
  content->canonicalize();
}

QPoly from_zpoly(const zpoly::ZPoly& z, long low) {
  std::vector<Rat> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rat(z[i]);
  return QPoly::from_dense(std::move(c), low);
}

}  // namespace kacq
