#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "powergraph/errors.hpp"
#include "powergraph/graphs.hpp"
#include "powergraph/groups.hpp"

namespace powergraph {

// Exponent domain of a power graph: all integers, positive integers only,
// or nonzero integers.
enum class Variant { Z, Nplus, Zpm };

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Z: return "z";
    case Variant::Nplus: return "nplus";
    case Variant::Zpm: return "zpm";
  }
  return "?";
}

inline Variant variant_from_name(const std::string& s) {
  if (s == "z") return Variant::Z;
  if (s == "nplus") return Variant::Nplus;
  if (s == "zpm") return Variant::Zpm;
  throw ConfigError("unknown variant '" + s + "' (expected z, nplus or zpm)");
}

inline bool variant_admits(const ExponentSet& s, Variant v) {
  switch (v) {
    case Variant::Z: return !s.empty();
    case Variant::Nplus: return s.has_positive();
    case Variant::Zpm: return s.has_nonzero();
  }
  return false;
}

// Arc x -> y: y is a power of x with an exponent from the variant's domain.
// Defined for x != y; equal arguments never carry an arc.
inline bool directed_adjacent(const GroupHandle& g, const Element& x, const Element& y, Variant v) {
  if (x == y) return false;
  return variant_admits(g.solve_power_of(y, x), v);
}

inline std::size_t default_resource_cap() {
  if (const char* env = std::getenv("POWERGRAPH_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return (std::size_t)v;
  }
  return 5000;
}

// A window of a group together with its power graph in one variant, as an
// undirected graph and as the defining digraph.  Adjacency is decided by
// exact power-equation solving, so the graphs are honest induced subgraphs
// of the corresponding infinite graphs.
struct PowerGraphBundle {
  explicit PowerGraphBundle(GroupHandle g) : group(std::move(g)) {}

  GroupHandle group;
  Variant variant = Variant::Z;
  WindowSpec window;
  std::vector<Element> carrier;
  SimpleGraph graph;
  Digraph digraph;
  int identity_index = 0;

  const Element& element(int v) const {
    if (v < 0 || (std::size_t)v >= carrier.size())
      throw UnknownVertex("vertex index " + std::to_string(v) + " out of range");
    return carrier[v];
  }

  int index_of(const Element& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw UnknownVertex("element " + group.format(x) + " not in window");
    return it->second;
  }

  bool carries(const Element& x) const { return index_.count(x) > 0; }

  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < carrier.size(); ++i) index_.emplace(carrier[i], (int)i);
  }

 private:
  std::map<Element, int> index_;
};

inline PowerGraphBundle build_power_graph_from_carrier(const GroupHandle& g,
                                                       std::vector<Element> carrier, Variant v,
                                                       WindowSpec window = WindowSpec::full(),
                                                       std::size_t cap = default_resource_cap()) {
  if (carrier.size() > cap)
    throw WindowTooLarge("window carrier has " + std::to_string(carrier.size()) +
                         " elements, cap is " + std::to_string(cap));
  PowerGraphBundle b(g);
  b.variant = v;
  b.window = window;

  std::vector<std::string> labels;
  labels.reserve(carrier.size());
  for (const Element& x : carrier) {
    if (!g.contains(x)) throw ElementNotInGroup("carrier element " + g.format(x) + " not in group");
    labels.push_back(g.format(x));
  }
  b.carrier = std::move(carrier);
  b.rebuild_index();
  b.identity_index = b.index_of(g.identity());

  b.graph = SimpleGraph(labels);
  b.digraph = Digraph(labels);
  std::size_t n = b.carrier.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (directed_adjacent(g, b.carrier[i], b.carrier[j], v)) {
        b.digraph.add_arc((int)i, (int)j);
        b.graph.add_edge((int)i, (int)j);
      }
    }
  return b;
}

inline PowerGraphBundle build_power_graph(const GroupHandle& g, const WindowSpec& w, Variant v,
                                          std::size_t cap = default_resource_cap()) {
  return build_power_graph_from_carrier(g, g.window_carrier(w), v, w, cap);
}

// Vertices adjacent to every other vertex.  Only the all-integer-exponent
// variant is supported; there the center of a finite cyclic group's graph
// is the whole group for prime power order, else {e} and the generators.
inline std::vector<int> center_of_power_graph(const PowerGraphBundle& b) {
  if (b.variant != Variant::Z)
    throw PreconditionFailed("center is defined for the all-integers variant");
  std::vector<int> out;
  std::size_t n = b.graph.vertex_count();
  for (std::size_t v = 0; v < n; ++v)
    if ((std::size_t)b.graph.degree((int)v) == n - 1) out.push_back((int)v);
  return out;
}

// Do x and y generate the same cyclic subgroup?
inline bool same_cyclic_subgroup(const GroupHandle& g, const Element& x, const Element& y) {
  return !g.solve_power_of(y, x).empty() && !g.solve_power_of(x, y).empty();
}

// Twins of the infinite power graph, decided symbolically (no window).
// For the all-integers variant on a torsion-free group the classes are
// {x, x^{-1}}, merged with the identity exactly when the group is infinite
// cyclic and x generates it.  For the nonzero-exponent variant the identity
// is always alone.  Finite groups are decided by scanning the full carrier.
inline bool symbolic_twins(const GroupHandle& g, const Element& x, const Element& y, Variant v) {
  if (v == Variant::Nplus)
    throw UnsupportedFamily("symbolic twin classes are provided for the z and zpm variants");
  if (x == y) return true;
  if (g.family() == Family::FiniteCayley) {
    for (const Element& u : g.window_carrier(WindowSpec::full())) {
      if (u == x || u == y) continue;
      if (directed_adjacent(g, u, x, v) || directed_adjacent(g, x, u, v)) {
        if (!(directed_adjacent(g, u, y, v) || directed_adjacent(g, y, u, v))) return false;
      } else if (directed_adjacent(g, u, y, v) || directed_adjacent(g, y, u, v)) {
        return false;
      }
    }
    // Neighborhoods agree off {x,y}; closed neighborhoods need x ~ y too.
    return directed_adjacent(g, x, y, v) || directed_adjacent(g, y, x, v);
  }
  if (y == g.inverse(x)) return true;  // x != e here, so this is a proper pair
  if (v == Variant::Zpm) return false;
  // Z variant, torsion-free: the identity's class picks up the generators
  // of an infinite cyclic group.
  Element e = g.identity();
  Element a = x, b = y;
  if (b == e) std::swap(a, b);
  if (a != e) return false;
  std::optional<Element> gen;
  if (g.family() == Family::IntegersZ) gen = Element((std::int64_t)1);
  if (g.family() == Family::RationalSubgroup) {
    auto q = g.heights().cyclic_generator();
    if (q) gen = Element(*q);
  }
  if (!gen) return false;
  return b == *gen || b == g.inverse(*gen);
}

// Partition of a bundle's carrier into symbolic twin classes.
inline std::vector<std::vector<int>> symbolic_twin_partition(const PowerGraphBundle& b) {
  std::size_t n = b.carrier.size();
  std::vector<std::vector<int>> blocks;
  std::vector<bool> used(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    std::vector<int> block{(int)v};
    used[v] = true;
    for (std::size_t u = v + 1; u < n; ++u)
      if (!used[u] && symbolic_twins(b.group, b.carrier[v], b.carrier[u], b.variant)) {
        block.push_back((int)u);
        used[u] = true;
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// Twin-class profile of an all-integers-variant bundle, plus the structural
// signature of the integers: one class of size three (identity with the two
// generators) and everything else in inverse pairs.
//
// A window can hide the element that separates two vertices (in the integer
// graph, 4 and 8 have equal closed neighborhoods inside [-10, 10]: the
// witness 12 is cut off), so graph twins inside a window may be coarser than
// the twin classes of the infinite graph.  The reported partition is the
// window twin partition with every such boundary merge split by the symbolic
// oracle; boundary_splits counts the blocks that needed splitting.
struct EquivClassProfile {
  TwinPartition window_partition;
  std::vector<std::size_t> block_sizes;
  std::size_t boundary_splits = 0;
  bool z_signature = false;
  bool window_matches_symbolic = false;
};

inline EquivClassProfile equiv_class_profile(const PowerGraphBundle& b) {
  if (b.variant != Variant::Z)
    throw PreconditionFailed("twin-class profile is defined for the all-integers variant");
  EquivClassProfile out;

  for (const auto& block : twin_partition(b.graph).blocks) {
    std::vector<std::vector<int>> parts;
    for (int v : block) {
      bool placed = false;
      for (auto& p : parts)
        if (symbolic_twins(b.group, b.carrier[p.front()], b.carrier[v], b.variant)) {
          p.push_back(v);
          placed = true;
          break;
        }
      if (!placed) parts.push_back({v});
    }
    if (parts.size() > 1) ++out.boundary_splits;
    for (auto& p : parts) out.window_partition.blocks.push_back(std::move(p));
  }
  std::sort(out.window_partition.blocks.begin(), out.window_partition.blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& c) { return a.front() < c.front(); });
  out.block_sizes = out.window_partition.block_sizes();

  // After splitting, the partition must agree with the symbolic classes; a
  // residual mismatch means the symbolic oracle merged vertices the window
  // graph itself tells apart.
  std::vector<std::vector<int>> symbolic = symbolic_twin_partition(b);
  auto normalize = [](std::vector<std::vector<int>> blocks) {
    for (auto& bl : blocks) std::sort(bl.begin(), bl.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  };
  out.window_matches_symbolic = normalize(out.window_partition.blocks) == normalize(symbolic);

  // The signature is read off the symbolic partition, so enlarging the
  // window cannot flip it.
  int size3_with_identity = 0;
  bool rest_are_pairs = true;
  for (const auto& bl : symbolic) {
    bool has_e = false;
    for (int v : bl) has_e |= v == b.identity_index;
    if (has_e) {
      if (bl.size() == 3)
        ++size3_with_identity;
      else
        rest_are_pairs = false;
    } else if (bl.size() != 2) {
      rest_are_pairs = false;
    }
  }
  out.z_signature = size3_with_identity == 1 && rest_are_pairs;
  return out;
}

}  // namespace powergraph
