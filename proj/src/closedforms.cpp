#include "kacq/closedforms.hpp"

#include <utility>

#include "kacq/errors.hpp"

namespace kacq {

namespace {

using RF = RationalFunction;

RF qp(long e) { return RF::q(e); }
RF qm1(long e) { return RF::q(e) - RF(1); }

void check_g(int g) {
  if (g < 1) throw Error(ErrorKind::InvalidArgument, "g must be positive");
}
void check_alpha(int alpha) {
  if (alpha < 1) throw Error(ErrorKind::InvalidArgument, "alpha must be positive");
}

// product of polynomials in T with rational-function coefficients
std::vector<RF> tmul(const std::vector<RF>& a, const std::vector<RF>& b) {
  std::vector<RF> c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

RationalFunction gloop_A2(int g, int alpha) {
  check_g(g);
  check_alpha(alpha);
  long a = alpha;
  return qp(2 * a * g - 1) * qm1(2 * g) * qm1(a * (2 * g - 3)) / (qm1(2) * qm1(2 * g - 3));
}

RationalFunction gloop_A3(int g, int alpha) {
  check_g(g);
  check_alpha(alpha);
  long a = alpha;
  RF pre = qp(3 * a * g - 2) * qm1(2 * g) * qm1(2 * g - 1) /
           (qm1(2) * qm1(3) * qm1(2 * g - 3) * qm1(6 * g - 8) * qm1(4 * g - 5));
  RF body = qp(a * (6 * g - 8) - 1) * qm1(6 * g - 7) * (qp(2 * g) + RF(1)) -
            qp(a * (6 * g - 8) + 2 * g - 4) * qm1(2) * (qp(4 * g - 3) + RF(1)) -
            qp(a * (2 * g - 3) - 1) * (qp(2) + qp(1) + RF(1)) * (qp(2 * g - 1) + RF(1)) * qm1(6 * g - 8) +
            (qp(1) + RF(1)) * qm1(8 * g - 10) + qp(2 * g - 4) * (qp(4) + RF(1)) * qm1(4 * g - 5);
  return pre * body;
}

RationalFunction gloop_fiber(int g, int alpha) {
  check_g(g);
  check_alpha(alpha);
  long a = alpha;
  RF d = qp(3) * qm1(2 * g - 3);
  return qm1(2 * g) / d * qp(a * (8 * g - 3)) - qm1(3) / d * qp(6 * a * g);
}

RationalFunction gloop_fiber_limit(int g) {
  check_g(g);
  return qm1(2 * g) / (qp(3) * qm1(2 * g - 3));
}

ZetaForm gloop_Z(int g) {
  check_g(g);
  ZetaForm Z;
  Z.num = {qm1(3) * qm1(2 * g)};
  Z.den = tmul({qp(3), RF(-1)}, {qp(2 * g), RF(-1)});
  return Z;
}

RationalFunction kronecker_A(int r, int alpha) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  // exponents a*r + b of the second factor
  static const std::vector<std::vector<std::pair<int, int>>> kTerms = {
      {{0, 0}},
      {{2, -4}, {1, -1}, {1, -2}, {0, 0}},
      {{4, -8}, {3, -5}, {3, -6}, {2, -2}, {2, -3}, {2, -4}, {1, -1}, {1, -2}, {0, 0}},
      {{6, -12}, {5, -9}, {5, -10}, {4, -6}, {4, -7}, {4, -8}, {3, -3}, {3, -4},
       {3, -5}, {3, -6}, {2, -2}, {2, -3}, {2, -4}, {1, -1}, {1, -2}, {0, 0}},
      {{8, -16}, {7, -13}, {7, -14}, {6, -10}, {6, -11}, {6, -12}, {5, -7}, {5, -8}, {5, -9},
       {5, -10}, {4, -4}, {4, -5}, {4, -6}, {4, -7}, {4, -8}, {3, -3}, {3, -4}, {3, -5},
       {3, -6}, {2, -2}, {2, -3}, {2, -4}, {1, -1}, {1, -2}, {0, 0}},
  };
  if (alpha < 1 || alpha > static_cast<int>(kTerms.size()))
    throw Error(ErrorKind::InvalidArgument, "Kronecker closed forms are tabulated for alpha = 1..5");
  RF base = qm1(r - 1) * qm1(r) / (qm1(1) * qm1(1) * (qp(1) + RF(1)));
  RF sum;
  for (const auto& [a, b] : kTerms[static_cast<size_t>(alpha - 1)]) sum += qp(static_cast<long>(a) * r + b);
  return base * sum;
}

ZetaForm kronecker_Z(int r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "r must be positive");
  RF pre = qm1(2) * qm1(r);
  // q^r (q-1)(q^2 + T) + (q^2+1)(q^{2r+1} - T)
  RF c0 = qp(r) * qm1(1) * qp(2) + (qp(2) + RF(1)) * qp(2 * r + 1);
  RF c1 = qp(r) * qm1(1) - (qp(2) + RF(1));
  ZetaForm Z;
  Z.num = {pre * c0, pre * c1};
  Z.den = tmul(tmul({qp(4), RF(-1)}, {qp(2 * r), RF(-1)}), {qp(r + 1), RF(-1)});
  return Z;
}

RationalFunction kronecker_fiber_limit(int r) {
  if (r < 4) throw Error(ErrorKind::InvalidArgument, "the Kronecker limit is finite for r >= 4");
  return qm1(r) * qm1(r - 1) / (qp(4) * qm1(r - 2) * qm1(r - 3));
}

RationalFunction cyclic3_limit_A() {
  return (qp(2) + RF(4) * qp(1) + RF(1)) / (qm1(1) * qm1(1));
}

RationalFunction cyclic3_limit_B() { return (qp(2) + RF(4) * qp(1) + RF(1)) / qp(2); }

}  // namespace kacq
