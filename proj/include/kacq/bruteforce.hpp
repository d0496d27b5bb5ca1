#pragma once

#include <cstdint>
#include <vector>

#include "kacq/finitering.hpp"
#include "kacq/quiver.hpp"

namespace kacq {

struct BruteConfig {
  int max_space_log2 = 24;      // cap on points of the representation space
  std::uint64_t max_group = 100000;
  int jobs = 1;                 // worker threads for sum reductions
  // End rings with at most 2^this elements are scanned for locality; larger
  // ones are classified by |Aut| = |End| (1 - q^-d) alone
  int locality_scan_log2 = 16;
};

// A point of R(Q, alpha; r): per-arrow matrices of shape r_dst x r_src.
struct RepPoint {
  std::vector<OMatrix> x;
};

struct OrbitRecord {
  RepPoint representative;  // smallest index in the orbit
  std::uint64_t orbit_size = 0;
  int end_exp = 0;          // |End| = q^end_exp
  Int aut_size;
  bool indecomposable = false;
  int top_degree = 0;       // |Aut| = |End| (1 - q^-d); 0 when decomposable
  bool absolutely_indecomposable = false;
  bool locality_exhaustive = false;  // End scanned element by element
};

// Enumerates R(Q, alpha; r) by mixed-radix index over all entries.
class RepSpace {
 public:
  RepSpace(const Quiver& Q, int alpha, const RankVector& r, int q, const BruteConfig& cfg = {});
  const Quiver& quiver() const { return Q_; }
  const ORing& ring() const { return *R_; }
  ORingPtr ring_ptr() const { return R_; }
  const RankVector& ranks() const { return r_; }
  int alpha() const { return alpha_; }
  int q() const { return q_; }
  int num_entries() const { return entries_; }
  std::uint64_t size() const { return size_; }
  RepPoint decode(std::uint64_t idx) const;
  std::uint64_t encode(const RepPoint& p) const;

 private:
  Quiver Q_;
  int alpha_, q_;
  RankVector r_;
  ORingPtr R_;
  int entries_ = 0;
  std::uint64_t size_ = 1;
};

// End(x) as the kernel of xi |-> (xi_j x_a - x_a xi_i)_a on the product of gl(r_i)
OMatrix end_system(const ORing& R, const Quiver& Q, const RankVector& r, const RepPoint& p);
// y |-> mu(x, y), mu_i = sum_{a into i} x_a y_a - sum_{a out of i} y_a x_a
OMatrix moment_system(const ORing& R, const Quiver& Q, const RankVector& r, const RepPoint& p);

std::vector<OrbitRecord> enumerate_orbits(const Quiver& Q, int alpha, const RankVector& r, int q,
                                          const BruteConfig& cfg = {});
// isomorphism classes of absolutely indecomposable representations
long count_abs_indecomposable(const Quiver& Q, int alpha, const RankVector& r, int q, const BruteConfig& cfg = {});
// Burnside: sum over GL of |Fix(g)| / |GL|
Int count_iso_classes(const Quiver& Q, int alpha, const RankVector& r, int q, const BruteConfig& cfg = {});

enum class FiberMethod {
  DirectKernel,  // per x, kernel size of y |-> mu(x, y)
  EndFormula,    // per orbit, q^(e(x) - alpha <r,r>) times the orbit size
  Naive,         // every pair (x, y)
};

// #mu^{-1}(t^{alpha-1} lambda) over O_alpha; lambda empty means zero
Int moment_fiber_count(const Quiver& Q, int alpha, const RankVector& r, int q, const std::vector<int>& lambda = {},
                       FiberMethod method = FiberMethod::DirectKernel, const BruteConfig& cfg = {});
// N_n = #mu^{-1}(0) over F_q[t]/(t^n), n = 1..n_max
std::vector<Int> jet_counts(const Quiver& Q, const RankVector& d, int q, int n_max, const BruteConfig& cfg = {});

// theta(a) = sum_k a_k B_k with integer basis matrices (read in F_p)
struct LinearFamily {
  int rows = 0, cols = 0;
  std::vector<std::vector<long>> basis;  // each row-major, rows*cols entries
};
// ask_n = q^{-n m} sum_{a in O_n^m} |Ker theta_n(a)|, n = 1..n_max
std::vector<Rat> ask_counts(const LinearFamily& theta, int q, int n_max, const BruteConfig& cfg = {});

// generic in the sense: lambda . r = 0 and lambda . r' != 0 for 0 < r' < r
bool is_generic(const std::vector<int>& lambda, const RankVector& r);

}  // namespace kacq
