#pragma once

#include <vector>

#include "kacq/quiver.hpp"
#include "kacq/ratfunc.hpp"
#include "kacq/series.hpp"

namespace kacq {

// Rank 1 toric Kac polynomial from weak chains E_1 <= ... <= E_alpha of arrow subsets.
QPoly toric_kac_wyss(const Quiver& Q, int alpha);
// Same polynomial as a sum of q^{n_T} over valued spanning trees.
QPoly toric_kac_trees(const Quiver& Q, int alpha);

struct ValuedTree {
  std::vector<int> edges;       // arrow indices, increasing
  std::vector<int> valuation;   // per edge, in [0, alpha - 1]
  int n_T = 0;
};
// every valued spanning tree with its exponent n_T
std::vector<ValuedTree> valued_spanning_trees(const Quiver& Q, int alpha);

// |GL_{alpha,r}| = prod_i q^{(alpha-1) r_i^2} |GL_{r_i}(F_q)|
RationalFunction gl_order_rf(int alpha, const RankVector& r);

// One-vertex quiver with g loops: M_{(Q,alpha),r} for r = 2, 3 from the
// conjugacy-type recurrences.
RationalFunction gloop_rank2_recurrence(int g, int alpha);
RationalFunction gloop_rank3_recurrence(int g, int alpha);
// type-by-type transition data, exposed for transcription tests
struct TypeRecurrence {
  std::vector<std::vector<RationalFunction>> matrix;  // rows: new type, cols: reduced type
  std::vector<RationalFunction> initial;              // alpha = 1
};
TypeRecurrence gloop_rank2_data(int g);
TypeRecurrence gloop_rank3_data(int g);
// sum of the type vector after alpha - 1 steps
RationalFunction recurrence_sum(const TypeRecurrence& rec, int alpha);
// A_{(Q,alpha),r} for r <= max_rank (max_rank <= 3) from the recurrences
std::vector<RationalFunction> gloop_kac_from_recurrence(int g, int alpha, int max_rank);

// sum M t^r = Exp(sum A t^r)
TruncatedSeries m_to_a(const TruncatedSeries& M);
TruncatedSeries a_to_m(const TruncatedSeries& A);

// #mu^{-1}(0) in rank 1 over O_alpha, assembled from toric Kac polynomials
// of vertex restrictions over all set partitions.
RationalFunction rank1_fiber_count(const Quiver& Q, int alpha);

// lim q^{-alpha b} A_{(Q,alpha),1} and the matching normalised fibre count
RationalFunction limit_A(const Quiver& Q);
RationalFunction limit_B(const Quiver& Q);
// fine Hilbert series of the order complex of proper nonempty arrow
// subsets, at u_E = q^{-(b(Q) - b(Q|E))}
RationalFunction order_complex_hilbert(const Quiver& Q);
constexpr int kMaxLimitArrows = 10;

// Z as a rational function of T = q^{-s}: (sum num[k] T^k) / (sum den[k] T^k)
struct ZetaForm {
  std::vector<RationalFunction> num, den;
};
// N_n = q^{m n} [T^n] (1 - T Z(T)) / (1 - T), n = 1..n_max; m = number of variables
std::vector<RationalFunction> poincare_from_zeta(const ZetaForm& Z, int m, int n_max);
std::vector<Rat> poincare_from_zeta(const ZetaForm& Z, const Rat& q0, int m, int n_max);

// A_{(Q,alpha),(1,2)} for the r-Kronecker quiver from its zeta function:
// jet counts, then the plethystic formula with the lower ranks filled in.
RationalFunction kronecker_kac_from_zeta(int r, int alpha);

}  // namespace kacq
