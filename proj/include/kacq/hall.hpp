#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kacq/finitering.hpp"
#include "kacq/qpoly.hpp"
#include "kacq/quiver.hpp"

namespace kacq {

// Hall algebra of the quiver 1 -> 2 over O_alpha. A point of rank (r1, r2)
// is an r2 x r1 matrix; its orbit is labelled by (q_0, ..., q_{alpha-1}),
// q_i = number of Smith invariants t^i.
using OrbitLabel = std::vector<int>;

std::vector<OrbitLabel> hall_orbits(int alpha, const RankVector& r);
OrbitLabel orbit_label(const ORing& R, const OMatrix& x);
OMatrix orbit_representative(const ORing& R, const OrbitLabel& label, const RankVector& r);
OrbitLabel direct_sum_label(const OrbitLabel& a, const OrbitLabel& b);
// indecomposable orbits: ranks (1,0), (0,1), and (1,1) with a nonzero map
bool is_indecomposable_orbit(const OrbitLabel& label, const RankVector& r);

struct HallFunction {
  int alpha = 1;
  RankVector rank{0, 0};
  std::map<OrbitLabel, Rat> values;  // missing labels are 0

  Rat operator()(const OrbitLabel& l) const;
  static HallFunction zero(int alpha, const RankVector& r);
  static HallFunction unit(int alpha);
  static HallFunction constant(int alpha, const RankVector& r, const Rat& c);
  static HallFunction indicator(int alpha, const RankVector& r, const OrbitLabel& l);
  static HallFunction simple(int alpha, int vertex);  // 1_{eps_1} or 1_{eps_2}
  // 1_{O_i}: rank (1,1), orbit of t^i, 0 <= i <= alpha
  static HallFunction orbit_indicator(int alpha, int i);
  bool is_zero() const;
  friend bool operator==(const HallFunction& a, const HallFunction& b);
  friend bool operator!=(const HallFunction& a, const HallFunction& b) { return !(a == b); }
};

HallFunction operator+(const HallFunction& a, const HallFunction& b);
HallFunction operator-(const HallFunction& a, const HallFunction& b);
HallFunction operator*(const Rat& c, const HallFunction& f);

struct HallConfig {
  std::uint64_t max_candidates = 4000000;  // generator matrices scanned per submodule list
};

// (f * g)(x) = sum over locally free x-stable M of rank(g): f(x on M_r/M) g(x on M)
HallFunction hall_product(const HallFunction& f, const HallFunction& g, int q, const HallConfig& cfg = {});

// number of x-stable locally free M with the given quotient and sub orbits,
// for x in orbit `x`; keyed by (quotient label, sub label)
std::map<std::pair<OrbitLabel, OrbitLabel>, Int> hall_numbers(int alpha, const RankVector& r, const OrbitLabel& x,
                                                              const RankVector& sub_rank, int q,
                                                              const HallConfig& cfg = {});

// element of H_{r'} (x) H_{r''}, as a function of two orbits
struct HallTensor {
  int alpha = 1;
  RankVector left{0, 0}, right{0, 0};
  std::map<std::pair<OrbitLabel, OrbitLabel>, Rat> values;
  friend bool operator==(const HallTensor& a, const HallTensor& b);
};

// one tensor per splitting r = r' + r'', r' increasing lexicographically
std::vector<HallTensor> hall_coproduct(const HallFunction& f);
// componentwise product in H (x) H
HallTensor tensor_product(const HallTensor& a, const HallTensor& b, int q, const HallConfig& cfg = {});
// Delta(f) * Delta(g) collected by splitting of rank(f) + rank(g)
std::vector<HallTensor> coproduct_product(const HallFunction& f, const HallFunction& g, int q,
                                          const HallConfig& cfg = {});

bool is_primitive(const HallFunction& f);
int primitive_space_dim(int alpha, const RankVector& r);
HallFunction bracket(const HallFunction& f, const HallFunction& g, int q, const HallConfig& cfg = {});

// Structure constants as polynomials in q: values at q = 2, 3, 4, 5, 7 are
// interpolated (degree <= 4) and checked at q = 9; InvalidArgument when the
// check fails.
struct HallPolyFunction {
  int alpha = 1;
  RankVector rank{0, 0};
  std::map<OrbitLabel, QPoly> values;
};
HallPolyFunction hall_product_poly(const HallFunction& f, const HallFunction& g, const HallConfig& cfg = {});
// value of the interpolated product at q = 1 (Euler characteristic count)
HallFunction hall_product_euler(const HallFunction& f, const HallFunction& g, const HallConfig& cfg = {});
HallFunction bracket_euler(const HallFunction& f, const HallFunction& g, const HallConfig& cfg = {});
std::vector<HallTensor> coproduct_product_euler(const HallFunction& f, const HallFunction& g,
                                                const HallConfig& cfg = {});

}  // namespace kacq
