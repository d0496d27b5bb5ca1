#pragma once

#include "kacq/kacpoly.hpp"
#include "kacq/ratfunc.hpp"

namespace kacq {

// One vertex, g loops.
RationalFunction gloop_A2(int g, int alpha);
RationalFunction gloop_A3(int g, int alpha);
// #mu^{-1}(0) over O_alpha in rank 2, and its limit after dividing by q^{alpha(8g-3)}
RationalFunction gloop_fiber(int g, int alpha);
RationalFunction gloop_fiber_limit(int g);
// zeta function of the moment map in rank 2; 8g variables
ZetaForm gloop_Z(int g);
constexpr int gloop_Z_vars(int g) { return 8 * g; }

// r-Kronecker quiver, rank (1, 2).
RationalFunction kronecker_A(int r, int alpha);  // alpha in 1..5
ZetaForm kronecker_Z(int r);
constexpr int kronecker_Z_vars(int r) { return 4 * r; }
RationalFunction kronecker_fiber_limit(int r);  // r >= 4

// oriented 3-cycle: lim q^{-alpha} A and lim q^{-4 alpha} B
RationalFunction cyclic3_limit_A();
RationalFunction cyclic3_limit_B();

}  // namespace kacq
