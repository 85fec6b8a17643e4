#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/errors.hpp"

namespace powergraph {

// Finite simple graph: irreflexive, symmetric adjacency over labelled
// vertices.  Vertex order is the construction order and is part of the
// value; all algorithms iterate in that order so results are deterministic.
class SimpleGraph {
 public:
  SimpleGraph() : n_(0) {}

  explicit SimpleGraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    n_ = labels_.size();
    adj_.assign(n_ * n_, false);
    for (std::size_t i = 0; i < n_; ++i)
      if (!index_.emplace(labels_[i], (int)i).second)
        throw PreconditionFailed("duplicate vertex label " + labels_[i]);
  }

  std::size_t vertex_count() const { return n_; }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (adj_[i * n_ + j]) ++m;
    return m;
  }

  const std::string& label(int v) const {
    check_index(v);
    return labels_[v];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownVertex("no vertex labelled " + label);
    return it->second;
  }

  bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }

  void add_edge(int u, int v) {
    check_index(u);
    check_index(v);
    if (u == v) throw PreconditionFailed("loop edge at " + labels_[u]);
    adj_[u * n_ + v] = adj_[v * n_ + u] = true;
  }

  void add_edge(const std::string& u, const std::string& v) { add_edge(index_of(u), index_of(v)); }

  bool adjacent(int u, int v) const {
    check_index(u);
    check_index(v);
    return adj_[u * n_ + v];
  }

  bool adjacent(const std::string& u, const std::string& v) const {
    return adjacent(index_of(u), index_of(v));
  }

  std::vector<int> neighbors(int v) const {
    check_index(v);
    std::vector<int> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (adj_[v * n_ + j]) out.push_back((int)j);
    return out;
  }

  int degree(int v) const { return (int)neighbors(v).size(); }

  // Closed neighborhood as a membership mask.
  std::vector<bool> closed_neighborhood(int v) const {
    check_index(v);
    std::vector<bool> mask(n_, false);
    for (std::size_t j = 0; j < n_; ++j) mask[j] = adj_[v * n_ + j];
    mask[v] = true;
    return mask;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (adj_[i * n_ + j]) out.emplace_back((int)i, (int)j);
    return out;
  }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void check_index(int v) const {
    if (v < 0 || (std::size_t)v >= n_) throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
  }

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::size_t n_;
  std::vector<bool> adj_;
};

// Finite directed graph without loops.  Arcs are ordered pairs.
class Digraph {
 public:
  Digraph() : n_(0) {}

  explicit Digraph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    n_ = labels_.size();
    adj_.assign(n_ * n_, false);
    for (std::size_t i = 0; i < n_; ++i)
      if (!index_.emplace(labels_[i], (int)i).second)
        throw PreconditionFailed("duplicate vertex label " + labels_[i]);
  }

  std::size_t vertex_count() const { return n_; }

  std::size_t arc_count() const {
    std::size_t m = 0;
    for (bool b : adj_)
      if (b) ++m;
    return m;
  }

  const std::string& label(int v) const {
    check_index(v);
    return labels_[v];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownVertex("no vertex labelled " + label);
    return it->second;
  }

  void add_arc(int u, int v) {
    check_index(u);
    check_index(v);
    if (u == v) throw PreconditionFailed("loop arc at " + labels_[u]);
    adj_[u * n_ + v] = true;
  }

  void add_arc(const std::string& u, const std::string& v) { add_arc(index_of(u), index_of(v)); }

  bool has_arc(int u, int v) const {
    check_index(u);
    check_index(v);
    return adj_[u * n_ + v];
  }

  bool has_arc(const std::string& u, const std::string& v) const {
    return has_arc(index_of(u), index_of(v));
  }

  std::vector<int> out_neighbors(int v) const {
    check_index(v);
    std::vector<int> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (adj_[v * n_ + j]) out.push_back((int)j);
    return out;
  }

  std::vector<int> in_neighbors(int v) const {
    check_index(v);
    std::vector<int> out;
    for (std::size_t j = 0; j < n_; ++j)
      if (adj_[j * n_ + v]) out.push_back((int)j);
    return out;
  }

  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (adj_[i * n_ + j]) out.emplace_back((int)i, (int)j);
    return out;
  }

  // Forgets orientation.
  SimpleGraph underlying() const {
    SimpleGraph g(labels_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (adj_[i * n_ + j] || adj_[j * n_ + i]) g.add_edge((int)i, (int)j);
    return g;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  void check_index(int v) const {
    if (v < 0 || (std::size_t)v >= n_) throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
  }

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::size_t n_;
  std::vector<bool> adj_;
};

// Partition of a graph's vertex set into classes of pairwise twins
// (vertices with equal closed neighborhoods).  Blocks are sorted by their
// smallest member; members ascend within a block.
struct TwinPartition {
  std::vector<std::vector<int>> blocks;

  int block_of(int v) const {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (int u : blocks[b])
        if (u == v) return (int)b;
    throw UnknownVertex("vertex " + std::to_string(v) + " not covered by partition");
  }

  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks) out.push_back(b.size());
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph out(g.labels());
  std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent((int)i, (int)j)) out.add_edge((int)i, (int)j);
  return out;
}

// Strong product: (u,v) ~ (u',v') iff (u=u' and v~v') or (u~u' and v=v')
// or (u~u' and v~v').  Vertex (i,j) gets position i*|h|+j.
inline SimpleGraph strong_product(const SimpleGraph& g, const SimpleGraph& h) {
  std::vector<std::string> labels;
  labels.reserve(g.vertex_count() * h.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < h.vertex_count(); ++j)
      labels.push_back(g.label((int)i) + "|" + h.label((int)j));
  SimpleGraph out(std::move(labels));
  std::size_t nh = h.vertex_count();
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < nh; ++j)
      for (std::size_t k = 0; k < g.vertex_count(); ++k)
        for (std::size_t l = 0; l < nh; ++l) {
          if (i * nh + j >= k * nh + l) continue;
          bool gu = g.adjacent((int)i, (int)k), hv = h.adjacent((int)j, (int)l);
          bool ge = i == k, he = j == l;
          if ((ge && hv) || (gu && he) || (gu && hv))
            out.add_edge((int)(i * nh + j), (int)(k * nh + l));
        }
  return out;
}

inline SimpleGraph induced(const SimpleGraph& g, const std::vector<int>& keep) {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int v : keep) labels.push_back(g.label(v));
  SimpleGraph out(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge((int)i, (int)j);
  return out;
}

inline SimpleGraph induced(const SimpleGraph& g, const std::vector<std::string>& keep) {
  std::vector<int> ids;
  ids.reserve(keep.size());
  for (const auto& l : keep) ids.push_back(g.index_of(l));
  return induced(g, ids);
}

inline Digraph induced(const Digraph& g, const std::vector<int>& keep) {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int v : keep) labels.push_back(g.label(v));
  Digraph out(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (i != j && g.has_arc(keep[i], keep[j])) out.add_arc((int)i, (int)j);
  return out;
}

inline Digraph transpose(const Digraph& g) {
  Digraph out(g.labels());
  for (auto [u, v] : g.arcs()) out.add_arc(v, u);
  return out;
}

// Components sorted by smallest vertex; vertices ascend within a component.
inline std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{(int)s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (std::size_t v = 0; v < n; ++v) out[comp[v]].push_back((int)v);
  return out;
}

// Blocks of the twin relation: u == v iff closed neighborhoods coincide.
inline TwinPartition twin_partition(const SimpleGraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> masks(n);
  for (std::size_t v = 0; v < n; ++v) masks[v] = g.closed_neighborhood((int)v);
  TwinPartition p;
  std::vector<bool> used(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    std::vector<int> block{(int)v};
    used[v] = true;
    for (std::size_t u = v + 1; u < n; ++u)
      if (!used[u] && masks[u] == masks[v]) {
        block.push_back((int)u);
        used[u] = true;
      }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

// Quotient by a twin partition.  Every block must consist of pairwise
// twins, so "some cross pair adjacent" and "every cross pair adjacent"
// agree; this is checked and PartitionMismatch is thrown on violation.
inline SimpleGraph quotient_by_twins(const SimpleGraph& g, const TwinPartition& p) {
  std::size_t n = g.vertex_count();
  std::vector<int> block_of(n, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int v : p.blocks[b]) {
      if (v < 0 || (std::size_t)v >= n) throw PartitionMismatch("partition names an unknown vertex");
      if (block_of[v] >= 0) throw PartitionMismatch("vertex " + g.label(v) + " appears in two blocks");
      block_of[v] = (int)b;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (block_of[v] < 0) throw PartitionMismatch("vertex " + g.label((int)v) + " not covered");

  std::vector<std::string> labels;
  labels.reserve(p.blocks.size());
  for (const auto& b : p.blocks) labels.push_back(g.label(b.front()));
  SimpleGraph out(std::move(labels));
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (std::size_t c = b + 1; c < p.blocks.size(); ++c) {
      bool any = false, all = true;
      for (int u : p.blocks[b])
        for (int v : p.blocks[c]) {
          if (g.adjacent(u, v))
            any = true;
          else
            all = false;
        }
      if (any != all)
        throw PartitionMismatch("blocks " + out.label((int)b) + " and " + out.label((int)c) +
                                " are joined by some but not all cross pairs");
      if (any) out.add_edge((int)b, (int)c);
    }
  return out;
}

namespace detail {

// Joint color refinement: vertices of both graphs are recolored together,
// so equal colors mean equal refinement histories across the two graphs.
// Colors are isomorphism-invariant; they prune the backtracking search.
template <class NeighborSig>
std::pair<std::vector<int>, std::vector<int>> refine_colors(std::size_t na, std::size_t nb,
                                                            std::vector<int> ca, std::vector<int> cb,
                                                            NeighborSig sig, int rounds) {
  for (int r = 0; r < rounds; ++r) {
    std::map<std::vector<int>, int> dict;
    std::vector<std::vector<int>> sa(na), sb(nb);
    for (std::size_t v = 0; v < na; ++v) sa[v] = sig(0, (int)v, ca, cb);
    for (std::size_t v = 0; v < nb; ++v) sb[v] = sig(1, (int)v, ca, cb);
    for (const auto& s : sa) dict.emplace(s, 0);
    for (const auto& s : sb) dict.emplace(s, 0);
    int next = 0;
    for (auto& [k, id] : dict) id = next++;
    for (std::size_t v = 0; v < na; ++v) ca[v] = dict[sa[v]];
    for (std::size_t v = 0; v < nb; ++v) cb[v] = dict[sb[v]];
  }
  return {ca, cb};
}

inline bool color_multisets_match(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

// Backtracking embedding of graph A onto graph B respecting full adjacency
// (both directions for digraphs).  Candidate targets are tried in input
// vertex order; the source order places the most constrained vertex first.
template <class Compatible>
std::optional<std::vector<int>> backtrack_bijection(std::size_t n, const std::vector<int>& ca,
                                                    const std::vector<int>& cb, Compatible compatible) {
  std::vector<int> class_size(ca.size() ? *std::max_element(ca.begin(), ca.end()) + 1 : 0, 0);
  for (int c : ca) ++class_size[c];

  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || class_size[ca[v]] < class_size[ca[best]]) best = (int)v;
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<int> map(n, -1), rmap(n, -1);
  std::size_t depth = 0;
  std::vector<int> cursor(n, 0);
  while (true) {
    if (depth == n) return map;
    int v = order[depth];
    bool advanced = false;
    for (int w = cursor[depth]; w < (int)n; ++w) {
      if (rmap[w] >= 0 || cb[w] != ca[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) ok = compatible(v, order[d], w, map[order[d]]);
      if (!ok) continue;
      map[v] = w;
      rmap[w] = v;
      cursor[depth] = w + 1;
      ++depth;
      if (depth < n) cursor[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    --depth;
    int pv = order[depth];
    rmap[map[pv]] = -1;
    map[pv] = -1;
  }
}

}  // namespace detail

// Isomorphism g -> h as an index map, or nullopt.  Deterministic: the
// returned map only depends on the two graphs' vertex orders.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::size_t n = g.vertex_count();
  std::vector<int> ca(n, 0), cb(n, 0);
  auto sig = [&](int side, int v, const std::vector<int>& xa, const std::vector<int>& xb) {
    const SimpleGraph& gr = side == 0 ? g : h;
    const std::vector<int>& self = side == 0 ? xa : xb;
    std::vector<int> s{self[v]};
    std::vector<int> nb;
    for (int u : gr.neighbors(v)) nb.push_back(self[u]);
    std::sort(nb.begin(), nb.end());
    s.insert(s.end(), nb.begin(), nb.end());
    return s;
  };
  auto [fa, fb] = detail::refine_colors(n, n, ca, cb, sig, 3);
  if (!detail::color_multisets_match(fa, fb)) return std::nullopt;
  auto compatible = [&](int v, int u, int w, int x) {
    return g.adjacent(v, u) == h.adjacent(w, x);
  };
  return detail::backtrack_bijection(n, fa, fb, compatible);
}

inline std::optional<std::vector<int>> find_isomorphism(const Digraph& g, const Digraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.arc_count() != h.arc_count()) return std::nullopt;
  std::size_t n = g.vertex_count();
  std::vector<int> ca(n, 0), cb(n, 0);
  auto sig = [&](int side, int v, const std::vector<int>& xa, const std::vector<int>& xb) {
    const Digraph& gr = side == 0 ? g : h;
    const std::vector<int>& self = side == 0 ? xa : xb;
    std::vector<int> s{self[v]};
    std::vector<int> outc, inc;
    for (int u : gr.out_neighbors(v)) outc.push_back(self[u]);
    for (int u : gr.in_neighbors(v)) inc.push_back(self[u]);
    std::sort(outc.begin(), outc.end());
    std::sort(inc.begin(), inc.end());
    s.push_back(-1);
    s.insert(s.end(), outc.begin(), outc.end());
    s.push_back(-1);
    s.insert(s.end(), inc.begin(), inc.end());
    return s;
  };
  auto [fa, fb] = detail::refine_colors(n, n, ca, cb, sig, 3);
  if (!detail::color_multisets_match(fa, fb)) return std::nullopt;
  auto compatible = [&](int v, int u, int w, int x) {
    return g.has_arc(v, u) == h.has_arc(w, x) && g.has_arc(u, v) == h.has_arc(x, w);
  };
  return detail::backtrack_bijection(n, fa, fb, compatible);
}

// Anti-isomorphism: isomorphism onto the transpose.
inline std::optional<std::vector<int>> find_anti_isomorphism(const Digraph& g, const Digraph& h) {
  return find_isomorphism(g, transpose(h));
}

inline bool is_isomorphism(const SimpleGraph& g, const SimpleGraph& h, const std::vector<int>& map) {
  std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int w : map) {
    if (w < 0 || (std::size_t)w >= n || hit[w]) return false;
    hit[w] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent((int)i, (int)j) != h.adjacent(map[i], map[j])) return false;
  return true;
}

inline bool is_isomorphism(const Digraph& g, const Digraph& h, const std::vector<int>& map) {
  std::size_t n = g.vertex_count();
  if (h.vertex_count() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (int w : map) {
    if (w < 0 || (std::size_t)w >= n || hit[w]) return false;
    hit[w] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.has_arc((int)i, (int)j) != h.has_arc(map[i], map[j])) return false;
  return true;
}

}  // namespace powergraph
