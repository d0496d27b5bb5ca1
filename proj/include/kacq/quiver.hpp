#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace kacq {

using RankVector = std::vector<int>;
using EdgeMask = std::uint32_t;

struct Arrow {
  int src = 0;
  int dst = 0;
  friend bool operator==(const Arrow& a, const Arrow& b) { return a.src == b.src && a.dst == b.dst; }
};

// Arrow list order is the total order on Q_1.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows, std::vector<int> multiplicities = {});
  static Quiver with_vertices(int n, std::vector<Arrow> arrows);

  static Quiver jordan() { return gloop(1); }
  static Quiver gloop(int g);
  static Quiver cycle(int n);
  static Quiver a2() { return with_vertices(2, {{0, 1}}); }
  static Quiver kronecker(int r);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int a) const { return arrows_.at(static_cast<size_t>(a)); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  bool is_loop(int a) const { return arrow(a).src == arrow(a).dst; }
  int loops_at(int i) const;
  int edges_between(int i, int j) const;  // unordered, i != j
  bool equal_multiplicities() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.labels_ == b.labels_ && a.arrows_ == b.arrows_ && a.mult_ == b.mult_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
  std::vector<int> mult_;
};

long euler_form(const Quiver& Q, const RankVector& d, const RankVector& e);
long symmetric_form(const Quiver& Q, const RankVector& d, const RankVector& e);
// Cartan-datum form: sum n_i r_i s_i - sum_{a:i->j} lcm(n_i, n_j) r_i s_j
long euler_form_h(const Quiver& Q, const RankVector& r, const RankVector& s);
RankVector unit_vector(int n, int i);
RankVector ones(int n);

int connected_components(const Quiver& Q);
bool is_connected(const Quiver& Q);
int betti(const Quiver& Q);
bool is_2_connected(const Quiver& Q);
// same quantities for Q restricted to an arrow subset, all vertices kept
int components_of(const Quiver& Q, EdgeMask edges);
int betti_of(const Quiver& Q, EdgeMask edges);
EdgeMask all_edges(const Quiver& Q);

Quiver restrict_vertices(const Quiver& Q, const std::vector<int>& I);
Quiver restrict_arrows(const Quiver& Q, const std::vector<int>& J);
Quiver contract(const Quiver& Q, int a);
Quiver delete_arrow(const Quiver& Q, int a);

// spanning trees as sorted arrow-index lists; non-loop arrows only
std::vector<std::vector<int>> spanning_trees(const Quiver& Q);
// path of tree arrows joining u and v
std::vector<int> tree_path(const Quiver& Q, const std::vector<int>& tree, int u, int v);

using SetPartition = std::vector<std::vector<int>>;
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& f);
std::vector<SetPartition> set_partitions(int n);

struct ChainConstraints {
  bool strict = false;
  bool final_fixed = false;
  EdgeMask final_mask = 0;
  bool restriction_connected = false;  // c(Q|E_last) = 1
};
// chains E_1 <= ... <= E_length of subsets of Q_1
std::vector<std::vector<EdgeMask>> chains_of_edge_subsets(const Quiver& Q, int length, const ChainConstraints& c);
// all strict chains (any length >= 0) of proper subsets of `universe`,
// increasing; the empty set is allowed only when include_empty
void for_each_strict_chain(EdgeMask universe, bool include_empty,
                           const std::function<void(const std::vector<EdgeMask>&)>& f);

struct SemisimpleType {
  std::vector<std::pair<RankVector, int>> parts;  // (dimension vector, multiplicity)
};

bool is_totally_negative(const Quiver& Q);
bool has_property_p(const Quiver& Q, const RankVector& d);
// loops 1 - <d_i,d_i> at i, -(d_i,d_j) arrows i -> j for i < j
Quiver aux_quiver(const Quiver& Q, const SemisimpleType& tau);

bool fundamental_set_member(const Quiver& Q, const RankVector& d);
RankVector simple_reflection(const Quiver& Q, int i, const RankVector& d);

// Connected quivers up to isomorphism of the underlying multigraph (loops
// allowed), oriented from lower to higher vertex index, arrows sorted.
std::vector<Quiver> connected_quiver_corpus(int max_vertices, int max_edges);

// JSON {"vertices":[...], "arrows":[{"src":0,"dst":1},...], "multiplicities":[...]}
Quiver quiver_from_json(const std::string& text);
std::string quiver_to_json(const Quiver& Q);
Quiver load_quiver(const std::string& path);

}  // namespace kacq
