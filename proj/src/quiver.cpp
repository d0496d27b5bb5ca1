#include "kacq/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "kacq/errors.hpp"

namespace kacq {

namespace {

struct DisjointSets {
  std::vector<int> p;
  explicit DisjointSets(int n) : p(static_cast<size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<size_t>(x)] != x) x = p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<size_t>(a)] = b;
    return true;
  }
};

void check_dim(const Quiver& Q, const RankVector& d) {
  if (static_cast<int>(d.size()) != Q.num_vertices())
    throw Error(ErrorKind::DimensionMismatch, "rank vector has length " + std::to_string(d.size()) + ", quiver has " +
                                                  std::to_string(Q.num_vertices()) + " vertices");
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(std::to_string(i + 1));
  return l;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> labels, std::vector<Arrow> arrows, std::vector<int> multiplicities)
    : labels_(std::move(labels)), arrows_(std::move(arrows)), mult_(std::move(multiplicities)) {
  int n = num_vertices();
  if (mult_.empty()) mult_.assign(static_cast<size_t>(n), 1);
  if (static_cast<int>(mult_.size()) != n) throw Error(ErrorKind::DimensionMismatch, "multiplicity list length");
  for (int m : mult_)
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
  for (const auto& a : arrows_)
    if (a.src < 0 || a.src >= n || a.dst < 0 || a.dst >= n)
      throw Error(ErrorKind::InvalidArgument, "arrow endpoint out of range");
  if (arrows_.size() > 32) throw Error(ErrorKind::CapExceeded, "at most 32 arrows supported");
}

Quiver Quiver::with_vertices(int n, std::vector<Arrow> arrows) { return Quiver(default_labels(n), std::move(arrows)); }

Quiver Quiver::gloop(int g) { return with_vertices(1, std::vector<Arrow>(static_cast<size_t>(g), Arrow{0, 0})); }

Quiver Quiver::cycle(int n) {
  std::vector<Arrow> a;
  for (int i = 0; i < n; ++i) a.push_back({i, (i + 1) % n});
  return with_vertices(n, a);
}

Quiver Quiver::kronecker(int r) { return with_vertices(2, std::vector<Arrow>(static_cast<size_t>(r), Arrow{0, 1})); }

int Quiver::loops_at(int i) const {
  int c = 0;
  for (const auto& a : arrows_) c += a.src == i && a.dst == i;
  return c;
}

int Quiver::edges_between(int i, int j) const {
  int c = 0;
  for (const auto& a : arrows_) c += (a.src == i && a.dst == j) || (a.src == j && a.dst == i);
  return c;
}

bool Quiver::equal_multiplicities() const {
  return std::all_of(mult_.begin(), mult_.end(), [&](int m) { return m == mult_.front(); });
}

long euler_form(const Quiver& Q, const RankVector& d, const RankVector& e) {
  check_dim(Q, d);
  check_dim(Q, e);
  long s = 0;
  for (size_t i = 0; i < d.size(); ++i) s += static_cast<long>(d[i]) * e[i];
  for (const auto& a : Q.arrows()) s -= static_cast<long>(d[static_cast<size_t>(a.src)]) * e[static_cast<size_t>(a.dst)];
  return s;
}

long symmetric_form(const Quiver& Q, const RankVector& d, const RankVector& e) {
  return euler_form(Q, d, e) + euler_form(Q, e, d);
}

long euler_form_h(const Quiver& Q, const RankVector& r, const RankVector& s) {
  check_dim(Q, r);
  check_dim(Q, s);
  const auto& n = Q.multiplicities();
  long v = 0;
  for (size_t i = 0; i < r.size(); ++i) v += static_cast<long>(n[i]) * r[i] * s[i];
  for (const auto& a : Q.arrows()) {
    long c = std::lcm(static_cast<long>(n[static_cast<size_t>(a.src)]), static_cast<long>(n[static_cast<size_t>(a.dst)]));
    v -= c * r[static_cast<size_t>(a.src)] * s[static_cast<size_t>(a.dst)];
  }
  return v;
}

RankVector unit_vector(int n, int i) {
  RankVector e(static_cast<size_t>(n), 0);
  e.at(static_cast<size_t>(i)) = 1;
  return e;
}

RankVector ones(int n) { return RankVector(static_cast<size_t>(n), 1); }

EdgeMask all_edges(const Quiver& Q) {
  return Q.num_arrows() == 32 ? ~EdgeMask(0) : ((EdgeMask(1) << Q.num_arrows()) - 1);
}

int components_of(const Quiver& Q, EdgeMask edges) {
  DisjointSets ds(Q.num_vertices());
  int c = Q.num_vertices();
  for (int a = 0; a < Q.num_arrows(); ++a)
    if (edges >> a & 1) c -= ds.unite(Q.arrow(a).src, Q.arrow(a).dst);
  return c;
}

int betti_of(const Quiver& Q, EdgeMask edges) {
  return components_of(Q, edges) - Q.num_vertices() + __builtin_popcount(edges);
}

int connected_components(const Quiver& Q) { return components_of(Q, all_edges(Q)); }
bool is_connected(const Quiver& Q) { return connected_components(Q) == 1; }
int betti(const Quiver& Q) { return betti_of(Q, all_edges(Q)); }

bool is_2_connected(const Quiver& Q) {
  if (!is_connected(Q)) return false;
  EdgeMask all = all_edges(Q);
  for (int a = 0; a < Q.num_arrows(); ++a)
    if (components_of(Q, all & ~(EdgeMask(1) << a)) != 1) return false;
  return true;
}

Quiver restrict_vertices(const Quiver& Q, const std::vector<int>& I) {
  std::vector<int> pos(static_cast<size_t>(Q.num_vertices()), -1);
  std::vector<std::string> labels;
  std::vector<int> mult;
  for (size_t k = 0; k < I.size(); ++k) {
    int v = I[k];
    if (v < 0 || v >= Q.num_vertices() || pos[static_cast<size_t>(v)] >= 0)
      throw Error(ErrorKind::InvalidArgument, "bad vertex subset");
    pos[static_cast<size_t>(v)] = static_cast<int>(k);
    labels.push_back(Q.labels()[static_cast<size_t>(v)]);
    mult.push_back(Q.multiplicities()[static_cast<size_t>(v)]);
  }
  std::vector<Arrow> arrows;
  for (const auto& a : Q.arrows()) {
    int s = pos[static_cast<size_t>(a.src)], t = pos[static_cast<size_t>(a.dst)];
    if (s >= 0 && t >= 0) arrows.push_back({s, t});
  }
  return Quiver(labels, arrows, mult);
}

Quiver restrict_arrows(const Quiver& Q, const std::vector<int>& J) {
  std::vector<int> sorted = J;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Arrow> arrows;
  for (int a : sorted) {
    if (a < 0 || a >= Q.num_arrows()) throw Error(ErrorKind::InvalidArgument, "bad arrow index");
    arrows.push_back(Q.arrow(a));
  }
  return Quiver(Q.labels(), arrows, Q.multiplicities());
}

Quiver contract(const Quiver& Q, int a) {
  if (a < 0 || a >= Q.num_arrows()) throw Error(ErrorKind::InvalidArgument, "bad arrow index");
  if (Q.is_loop(a)) throw Error(ErrorKind::ContractLoop, "cannot contract loop " + std::to_string(a));
  int keep = std::min(Q.arrow(a).src, Q.arrow(a).dst), gone = std::max(Q.arrow(a).src, Q.arrow(a).dst);
  auto remap = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<std::string> labels;
  std::vector<int> mult;
  for (int v = 0; v < Q.num_vertices(); ++v) {
    if (v == gone) continue;
    std::string l = Q.labels()[static_cast<size_t>(v)];
    if (v == keep) l += "+" + Q.labels()[static_cast<size_t>(gone)];
    labels.push_back(l);
    mult.push_back(Q.multiplicities()[static_cast<size_t>(v)]);
  }
  std::vector<Arrow> arrows;
  for (int b = 0; b < Q.num_arrows(); ++b)
    if (b != a) arrows.push_back({remap(Q.arrow(b).src), remap(Q.arrow(b).dst)});
  return Quiver(labels, arrows, mult);
}

Quiver delete_arrow(const Quiver& Q, int a) {
  if (a < 0 || a >= Q.num_arrows()) throw Error(ErrorKind::InvalidArgument, "bad arrow index");
  std::vector<Arrow> arrows;
  for (int b = 0; b < Q.num_arrows(); ++b)
    if (b != a) arrows.push_back(Q.arrow(b));
  return Quiver(Q.labels(), arrows, Q.multiplicities());
}

namespace {

void tree_search(const Quiver& Q, const std::vector<int>& edges, size_t idx, int need, DisjointSets ds,
                 std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (need == 0) {
    out.push_back(cur);
    return;
  }
  if (edges.size() - idx < static_cast<size_t>(need)) return;
  int a = edges[idx];
  DisjointSets with = ds;
  if (with.unite(Q.arrow(a).src, Q.arrow(a).dst)) {
    cur.push_back(a);
    tree_search(Q, edges, idx + 1, need - 1, with, cur, out);
    cur.pop_back();
  }
  tree_search(Q, edges, idx + 1, need, ds, cur, out);
}

}  // namespace

std::vector<std::vector<int>> spanning_trees(const Quiver& Q) {
  if (!is_connected(Q)) throw Error(ErrorKind::NotConnected, "spanning trees need a connected quiver");
  std::vector<int> edges;
  for (int a = 0; a < Q.num_arrows(); ++a)
    if (!Q.is_loop(a)) edges.push_back(a);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  tree_search(Q, edges, 0, Q.num_vertices() - 1, DisjointSets(Q.num_vertices()), cur, out);
  return out;
}

std::vector<int> tree_path(const Quiver& Q, const std::vector<int>& tree, int u, int v) {
  int n = Q.num_vertices();
  std::vector<int> via(static_cast<size_t>(n), -1), prev(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<int> bfs;
  bfs.push(u);
  seen[static_cast<size_t>(u)] = 1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    for (int a : tree) {
      const Arrow& ar = Q.arrow(a);
      int y = ar.src == x ? ar.dst : (ar.dst == x ? ar.src : -1);
      if (y < 0 || seen[static_cast<size_t>(y)]) continue;
      seen[static_cast<size_t>(y)] = 1;
      via[static_cast<size_t>(y)] = a;
      prev[static_cast<size_t>(y)] = x;
      bfs.push(y);
    }
  }
  if (!seen[static_cast<size_t>(v)]) throw Error(ErrorKind::NotConnected, "vertices not joined by the tree");
  std::vector<int> path;
  for (int x = v; x != u; x = prev[static_cast<size_t>(x)]) path.push_back(via[static_cast<size_t>(x)]);
  std::reverse(path.begin(), path.end());
  return path;
}

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& f) {
  if (n == 0) {
    f({});
    return;
  }
  std::vector<int> block(static_cast<size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int nblocks) {
    if (i == n) {
      SetPartition p(static_cast<size_t>(nblocks));
      for (int v = 0; v < n; ++v) p[static_cast<size_t>(block[static_cast<size_t>(v)])].push_back(v);
      f(p);
      return;
    }
    for (int b = 0; b <= nblocks; ++b) {
      block[static_cast<size_t>(i)] = b;
      rec(i + 1, std::max(nblocks, b + 1));
    }
  };
  rec(0, 0);
}

std::vector<SetPartition> set_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<std::vector<EdgeMask>> chains_of_edge_subsets(const Quiver& Q, int length, const ChainConstraints& c) {
  if (length < 1) throw Error(ErrorKind::InvalidArgument, "chain length must be positive");
  int m = Q.num_arrows();
  std::vector<int> t(static_cast<size_t>(m), 1);  // arrow a lies in E_k iff t[a] <= k
  std::vector<std::vector<EdgeMask>> out;
  while (true) {
    std::vector<EdgeMask> chain(static_cast<size_t>(length), 0);
    for (int a = 0; a < m; ++a)
      for (int k = t[static_cast<size_t>(a)]; k <= length; ++k) chain[static_cast<size_t>(k - 1)] |= EdgeMask(1) << a;
    bool ok = true;
    if (c.strict)
      for (int k = 1; k < length && ok; ++k) ok = chain[static_cast<size_t>(k - 1)] != chain[static_cast<size_t>(k)];
    if (ok && c.final_fixed) ok = chain.back() == c.final_mask;
    if (ok && c.restriction_connected) ok = components_of(Q, chain.back()) == 1;
    if (ok) out.push_back(std::move(chain));
    int a = 0;
    while (a < m && t[static_cast<size_t>(a)] == length + 1) t[static_cast<size_t>(a++)] = 1;
    if (a == m) break;
    ++t[static_cast<size_t>(a)];
  }
  return out;
}

namespace {

void strict_chain_rec(EdgeMask universe, std::vector<EdgeMask>& chain,
                      const std::function<void(const std::vector<EdgeMask>&)>& f) {
  f(chain);
  EdgeMask top = chain.back();
  EdgeMask free = universe & ~top;
  for (EdgeMask sub = free; sub; sub = (sub - 1) & free) {
    EdgeMask next = top | sub;
    if (next == universe) continue;
    chain.push_back(next);
    strict_chain_rec(universe, chain, f);
    chain.pop_back();
  }
}

}  // namespace

void for_each_strict_chain(EdgeMask universe, bool include_empty,
                           const std::function<void(const std::vector<EdgeMask>&)>& f) {
  std::vector<EdgeMask> chain;
  f(chain);
  // first element: any proper subset (nonempty unless include_empty)
  std::vector<EdgeMask> firsts;
  for (EdgeMask sub = universe;; sub = (sub - 1) & universe) {
    if (sub != universe && (sub != 0 || include_empty)) firsts.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(firsts.begin(), firsts.end());
  for (EdgeMask s : firsts) {
    chain.assign(1, s);
    strict_chain_rec(universe, chain, f);
  }
}

bool is_totally_negative(const Quiver& Q) {
  int n = Q.num_vertices();
  for (int i = 0; i < n; ++i) {
    if (Q.loops_at(i) < 2) return false;
    for (int j = i + 1; j < n; ++j)
      if (Q.edges_between(i, j) < 1) return false;
  }
  return true;
}

bool has_property_p(const Quiver& Q, const RankVector& d) {
  check_dim(Q, d);
  bool nonzero = false;
  for (int x : d) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "dimension vector must be nonnegative");
    nonzero |= x != 0;
  }
  if (!nonzero) throw Error(ErrorKind::InvalidArgument, "dimension vector must be nonzero");
  if (!is_totally_negative(Q)) return false;
  std::vector<int> supp;
  for (int i = 0; i < Q.num_vertices(); ++i)
    if (d[static_cast<size_t>(i)] > 0) supp.push_back(i);
  if (supp.size() == 2 && Q.edges_between(supp[0], supp[1]) == 1 && d[static_cast<size_t>(supp[0])] == 1 &&
      d[static_cast<size_t>(supp[1])] == 1)
    return false;
  return true;
}

Quiver aux_quiver(const Quiver& Q, const SemisimpleType& tau) {
  int s = static_cast<int>(tau.parts.size());
  if (s == 0) throw Error(ErrorKind::InvalidType, "empty semisimple type");
  for (const auto& [d, e] : tau.parts) {
    check_dim(Q, d);
    if (e < 1) throw Error(ErrorKind::InvalidType, "part multiplicity must be positive");
    bool pos = false;
    for (int x : d) {
      if (x < 0) throw Error(ErrorKind::InvalidType, "negative dimension vector");
      pos |= x > 0;
    }
    if (!pos) throw Error(ErrorKind::InvalidType, "zero dimension vector in type");
  }
  std::vector<Arrow> arrows;
  for (int i = 0; i < s; ++i) {
    long loops = 1 - euler_form(Q, tau.parts[static_cast<size_t>(i)].first, tau.parts[static_cast<size_t>(i)].first);
    if (loops < 0) throw Error(ErrorKind::InvalidType, "1 - <d,d> is negative for part " + std::to_string(i));
    for (long k = 0; k < loops; ++k) arrows.push_back({i, i});
  }
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      long c = -symmetric_form(Q, tau.parts[static_cast<size_t>(i)].first, tau.parts[static_cast<size_t>(j)].first);
      if (c < 0) throw Error(ErrorKind::InvalidType, "(d_i,d_j) is positive for parts " + std::to_string(i) + "," + std::to_string(j));
      for (long k = 0; k < c; ++k) arrows.push_back({i, j});
    }
  return Quiver::with_vertices(s, arrows);
}

bool fundamental_set_member(const Quiver& Q, const RankVector& d) {
  check_dim(Q, d);
  std::vector<int> supp;
  for (int i = 0; i < Q.num_vertices(); ++i) {
    if (d[static_cast<size_t>(i)] < 0) throw Error(ErrorKind::InvalidArgument, "dimension vector must be nonnegative");
    if (d[static_cast<size_t>(i)] > 0) supp.push_back(i);
  }
  if (supp.empty()) return false;
  for (int i = 0; i < Q.num_vertices(); ++i)
    if (symmetric_form(Q, d, unit_vector(Q.num_vertices(), i)) > 0) return false;
  return is_connected(restrict_vertices(Q, supp));
}

RankVector simple_reflection(const Quiver& Q, int i, const RankVector& d) {
  check_dim(Q, d);
  if (i < 0 || i >= Q.num_vertices()) throw Error(ErrorKind::InvalidArgument, "bad vertex");
  if (Q.loops_at(i) > 0) throw Error(ErrorKind::ReflectionAtImaginaryVertex, "vertex " + std::to_string(i) + " carries a loop");
  RankVector r = d;
  r[static_cast<size_t>(i)] -= static_cast<int>(symmetric_form(Q, d, unit_vector(Q.num_vertices(), i)));
  return r;
}

}  // namespace kacq

namespace kacq {

namespace {

// edge slot list for n vertices: loops first, then pairs i<j
std::vector<Arrow> edge_slots(int n) {
  std::vector<Arrow> s;
  for (int i = 0; i < n; ++i) s.push_back({i, i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back({i, j});
  return s;
}

std::vector<Arrow> canonical_arrows(int n, const std::vector<Arrow>& arrows) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Arrow> best;
  bool first = true;
  auto key = [](const Arrow& a) { return std::make_pair(a.src, a.dst); };
  do {
    std::vector<Arrow> img;
    for (const auto& a : arrows) {
      int s = perm[static_cast<size_t>(a.src)], t = perm[static_cast<size_t>(a.dst)];
      img.push_back({std::min(s, t), std::max(s, t)});
    }
    std::sort(img.begin(), img.end(), [&](const Arrow& x, const Arrow& y) { return key(x) < key(y); });
    auto less = [&](const std::vector<Arrow>& x, const std::vector<Arrow>& y) {
      for (size_t i = 0; i < x.size(); ++i)
        if (key(x[i]) != key(y[i])) return key(x[i]) < key(y[i]);
      return false;
    };
    if (first || less(img, best)) best = img;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Quiver> connected_quiver_corpus(int max_vertices, int max_edges) {
  std::vector<Quiver> out;
  for (int n = 1; n <= max_vertices; ++n) {
    auto slots = edge_slots(n);
    std::vector<std::vector<Arrow>> seen;
    std::vector<int> mult(slots.size(), 0);
    // multisets of slots with total size <= max_edges
    std::function<void(size_t, int)> rec = [&](size_t i, int left) {
      if (i == slots.size()) {
        std::vector<Arrow> arrows;
        for (size_t k = 0; k < slots.size(); ++k)
          for (int c = 0; c < mult[k]; ++c) arrows.push_back(slots[k]);
        Quiver Q = Quiver::with_vertices(n, arrows);
        if (!is_connected(Q)) return;
        auto canon = canonical_arrows(n, arrows);
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) return;
        seen.push_back(canon);
        out.push_back(Quiver::with_vertices(n, canon));
        return;
      }
      for (int c = 0; c <= left; ++c) {
        mult[i] = c;
        rec(i + 1, left - c);
      }
      mult[i] = 0;
    };
    rec(0, max_edges);
  }
  return out;
}

}  // namespace kacq
