#include <doctest.h>

#include "kacq/errors.hpp"
#include "kacq/series.hpp"
#include "support.hpp"

using namespace kacq;
using kacq::test::rf;

TEST_CASE("polynomial parse and print") {
  QPoly p = parse_qpoly("q^7 + q^6 + 3q^5 + 2q^4 + 2q^3");
  CHECK(p.str() == "q^7 + q^6 + 3q^5 + 2q^4 + 2q^3");
  CHECK(parse_qpoly("q^2+4q+1").str(false) == "q^2+4q+1");
  CHECK(parse_qpoly("(3/2)q^2 - 1/2").str() == "(3/2)q^2 - 1/2");
  CHECK(parse_qpoly("q^-2 + 1").low() == -2);
  CHECK(parse_qpoly("0").is_zero());
  CHECK_THROWS_AS(parse_qpoly("q^"), Error);
  CHECK_THROWS_AS(parse_qpoly("x+1"), Error);
}

TEST_CASE("rf_eval examples") {
  CHECK(rf_eval(rf("q"), 2) == 2);
  CHECK(rf_eval(rf("q^2+4q+1", "q^2-2q+1"), 2) == 13);
  CHECK(rf_eval(rf("q^3-1", "q-1"), 3) == 13);
  CHECK_THROWS_AS(rf_eval(rf("1", "q-1"), 1), Error);
  try {
    rf_eval(rf("1", "q-2"), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtEvaluationPoint);
  }
  CHECK_THROWS_AS(rf_eval(rf("q^-1"), 0), Error);
}

TEST_CASE("canonical normal form") {
  CHECK(rf("q^2-1", "q-1") == rf("q+1"));
  CHECK(rf("2q", "4q^3") == rf("1/2", "q^2"));
  auto f = rf("1", "1-q");
  CHECK(f.den().lead() > 0);
  CHECK(f == -rf("1", "q-1"));
  CHECK(rf("q^2+4q+1", "q^2-2q+1").pretty() == "(q^2+4q+1)/(q-1)^2");
  CHECK(rf("q^2+4q+1", "q^2").pretty() == "(q^2+4q+1)/q^2");
  CHECK(rf("q^3", "2q-2").pretty() == "q^3/(2(q-1))");
  CHECK(rf("q+2").pretty() == "q+2");
}

TEST_CASE("canonical string roundtrip") {
  std::mt19937 g(7);
  for (int i = 0; i < 50; ++i) {
    auto f = test::random_rf(g);
    CHECK(parse_rf(f.str()) == f);
  }
}

TEST_CASE("rational functions form a field") {
  std::mt19937 g(11);
  for (int i = 0; i < 100; ++i) {
    auto f = test::random_rf(g), h = test::random_rf(g);
    if (h.is_zero()) continue;
    CHECK((f * h) / h == f);
    CHECK((f + h) - h == f);
    // equality agrees with cross-multiplication
    auto s = f * h + f;
    auto t = f * (h + RationalFunction(1));
    CHECK(s == t);
    CHECK(s.num() * t.den() == t.num() * s.den());
  }
}

TEST_CASE("gcd cancels random common factors") {
  std::mt19937 g(3);
  for (int i = 0; i < 50; ++i) {
    QPoly a = test::random_poly(g, 6, 9), b = test::random_poly(g, 6, 9), c = test::random_poly(g, 5, 9);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    RationalFunction x(a * c, b * c), y(a, b);
    CHECK(x == y);
  }
}

TEST_CASE("rf_eval is a ring homomorphism") {
  std::mt19937 g(5);
  for (int i = 0; i < 100; ++i) {
    auto f = test::random_rf(g), h = test::random_rf(g);
    for (Rat x : {Rat(2), Rat(3), ratio(-7, 3), ratio(5, 11)}) {
      try {
        Rat fx = rf_eval(f, x), hx = rf_eval(h, x);
        CHECK(rf_eval(f + h, x) == fx + hx);
        CHECK(rf_eval(f * h, x) == fx * hx);
      } catch (const Error&) {
      }
    }
  }
}

TEST_CASE("adams operators") {
  CHECK(adams(rf("q"), 2) == rf("q^2"));
  auto u = rf("1", "1-q^-1");
  CHECK(adams(u, 1) == u);
  CHECK(adams(rf("q+1", "q-1"), 3) == rf("q^3+1", "q^3-1"));
  std::mt19937 g(9);
  for (int i = 0; i < 40; ++i) {
    auto f = test::random_rf(g);
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) CHECK(adams(adams(f, a), b) == adams(f, a * b));
  }
  CHECK_THROWS_AS(adams(u, 0), Error);
}

namespace {

TruncatedSeries mono(const std::vector<int>& bound, const std::vector<int>& r, const RationalFunction& c) {
  return TruncatedSeries::monomial(bound, r, c);
}

TruncatedSeries random_aug(std::mt19937& g, const std::vector<int>& bound) {
  TruncatedSeries s(bound);
  std::uniform_int_distribution<int> coin(0, 2);
  for (size_t i = 1; i < s.size(); ++i)
    if (coin(g) == 0) s.set(s.exponent(i), test::random_rf(g, 2, 3));
  return s;
}

}  // namespace

TEST_CASE("plethystic exponential examples") {
  auto e = plethystic_exp(mono({3}, {1}, 1));
  for (int k = 0; k <= 3; ++k) CHECK(e.coeff({k}) == RationalFunction(1));

  auto e2 = plethystic_exp(mono({1, 1}, {1, 0}, 1) + mono({1, 1}, {0, 1}, 1));
  for (auto r : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}) CHECK(e2.coeff(r) == RationalFunction(1));

  // Exp(q t) = 1/(1 - q t): geometric oracle
  auto e3 = plethystic_exp(mono({4}, {1}, rf("q")));
  for (int k = 0; k <= 4; ++k) CHECK(e3.coeff({k}) == rf("q").pow(k));
}

TEST_CASE("plethystic logarithm examples") {
  TruncatedSeries geo({5});
  for (int k = 0; k <= 5; ++k) geo.set({k}, 1);
  CHECK(plethystic_log(geo) == mono({5}, {1}, 1));

  auto f = mono({2, 2}, {1, 0}, rf("q")) + mono({2, 2}, {0, 1}, rf("q")) + mono({2, 2}, {1, 1}, 1);
  CHECK(plethystic_log(plethystic_exp(f)) == f);
}

TEST_CASE("plethystic identities on random series") {
  std::mt19937 g(21);
  for (auto bound : std::vector<std::vector<int>>{{4}, {2, 2}, {2, 1}, {1, 1, 1}}) {
    for (int i = 0; i < 4; ++i) {
      auto f = random_aug(g, bound), h = random_aug(g, bound);
      CHECK(plethystic_log(plethystic_exp(f)) == f);
      CHECK(plethystic_exp(f + h) == plethystic_exp(f) * plethystic_exp(h));
    }
  }
}

TEST_CASE("plethystic errors") {
  auto one = TruncatedSeries::one({2});
  CHECK_THROWS_AS(plethystic_exp(one), Error);
  CHECK_THROWS_AS(plethystic_log(TruncatedSeries({2})), Error);
  try {
    plethystic_log(TruncatedSeries({2}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstantTermNotOne);
  }
}

TEST_CASE("volume sequences under Adams operators") {
  auto v = VolumeSequence::from_rf(rf("q"), 2);
  CHECK(v.at(1) == 2);
  CHECK(v.at(4) == 16);
  auto w = v.adams(2);
  CHECK(w.at(1) == 4);
  CHECK(w.at(2) == 16);
  CHECK_FALSE(w.defined(3));
  // numeric shadow agrees with the symbolic series at q = 2
  auto f = mono({2}, {1}, rf("q")) + mono({2}, {2}, rf("q^2-1"));
  Series<VolumeSequence> fv({2});
  fv.set({1}, VolumeSequence::from_rf(rf("q"), 2));
  fv.set({2}, VolumeSequence::from_rf(rf("q^2-1"), 2));
  auto ev = plethystic_exp(fv);
  auto es = plethystic_exp(f);
  for (int k = 0; k <= 2; ++k) CHECK(ev.coeff({k}).at(1) == rf_eval(es.coeff({k}), 2));
}

TEST_CASE("series JSON roundtrip") {
  auto f = mono({2, 1}, {1, 0}, rf("q")) + mono({2, 1}, {2, 1}, rf("q^2+1", "q-1"));
  auto text = series_to_json(f);
  CHECK(series_from_json(text) == f);
  CHECK(text.find("\"bound\":[2,1]") != std::string::npos);
  CHECK_THROWS_AS(series_from_json("{\"bound\":[1]}"), Error);
}

TEST_CASE("moebius") {
  std::vector<long> expect = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (size_t n = 1; n <= expect.size(); ++n) CHECK(moebius(static_cast<long>(n)) == expect[n - 1]);
}
