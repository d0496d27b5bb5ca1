#pragma once

#include <random>

#include "kacq/ratfunc.hpp"

namespace kacq::test {

inline RationalFunction rf(const std::string& num, const std::string& den = "1") {
  return RationalFunction(parse_qpoly(num), parse_qpoly(den));
}

inline QPoly random_poly(std::mt19937& g, int maxdeg, int maxc, bool laurent = false) {
  std::uniform_int_distribution<int> deg(0, maxdeg), co(-maxc, maxc), sh(-2, 2);
  int d = deg(g);
  std::vector<Rat> c(static_cast<size_t>(d + 1));
  for (auto& x : c) x = co(g);
  return QPoly::from_dense(c, laurent ? sh(g) : 0);
}

inline RationalFunction random_rf(std::mt19937& g, int maxdeg = 4, int maxc = 5) {
  QPoly d;
  while (d.is_zero()) d = random_poly(g, maxdeg, maxc, true);
  return RationalFunction(random_poly(g, maxdeg, maxc, true), d);
}

}  // namespace kacq::test
