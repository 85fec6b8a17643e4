#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/errors.hpp"
#include "powergraph/graphs.hpp"
#include "powergraph/groups.hpp"
#include "powergraph/power_graph.hpp"

namespace powergraph {

// Does some positive power of x equal some positive power of y?  This is
// exactly "x and y lie in the same component of the positive-exponent graph"
// for infinite-order elements, and it is decided symbolically, without any
// window.
inline bool sbar_same_component(const GroupHandle& g, const Element& x, const Element& y) {
  if (g.family() == Family::FiniteCayley)
    throw UnsupportedFamily("sbar components are provided for the infinite families");
  if (x == g.identity() || y == g.identity()) return x == y;
  switch (g.family()) {
    case Family::IntegersZ: {
      std::int64_t a = std::get<std::int64_t>(x), b = std::get<std::int64_t>(y);
      return (a > 0) == (b > 0);
    }
    case Family::RationalSubgroup: {
      if (!g.contains(x) || !g.contains(y)) throw ElementNotInGroup("sbar argument outside subgroup");
      return (std::get<Rational>(x) > Rational(0)) == (std::get<Rational>(y) > Rational(0));
    }
    case Family::HeisenbergZ: {
      const HTriple& u = std::get<HTriple>(x);
      const HTriple& v = std::get<HTriple>(y);
      bool uc = u.a == 0 && u.b == 0, vc = v.a == 0 && v.b == 0;
      if (uc != vc) return false;
      if (uc) return (u.c > 0) == (v.c > 0);
      // Positive powers scale the (a,b) part by n, so the two elements must
      // point along the same primitive vector; the twisted third coordinate
      // then matches iff (2c - ab) d' = (2c' - a'b') d for the scales d, d'.
      std::int64_t du = std::gcd(u.a < 0 ? -u.a : u.a, u.b < 0 ? -u.b : u.b);
      std::int64_t dv = std::gcd(v.a < 0 ? -v.a : v.a, v.b < 0 ? -v.b : v.b);
      if (u.a * dv != v.a * du || u.b * dv != v.b * du) return false;
      return (2 * u.c - u.a * u.b) * dv == (2 * v.c - v.a * v.b) * du;
    }
    default: break;
  }
  throw UnsupportedFamily("sbar components are provided for the infinite families");
}

// One component of a nonzero-exponent window graph, cut into the two halves
// it acquires in the positive-exponent graph.  psi1 is the half containing
// the component's smallest vertex; psi2 consists of the inverses.
struct ComponentSplit {
  std::vector<int> phi;
  std::vector<int> psi1;
  std::vector<int> psi2;
  std::vector<std::pair<int, int>> inversion_pairs;
};

inline ComponentSplit split_component(const PowerGraphBundle& b, const std::vector<int>& component) {
  if (b.variant != Variant::Zpm)
    throw PreconditionFailed("component splitting expects a nonzero-exponent bundle");
  if (component.empty()) throw PreconditionFailed("empty component");
  ComponentSplit out;
  out.phi = component;
  std::sort(out.phi.begin(), out.phi.end());

  for (int v : out.phi) {
    if (b.group.element_order(b.element(v)))
      throw TorsionComponent("vertex " + b.graph.label(v) + " has finite order");
  }

  const Element& anchor = b.element(out.phi.front());
  std::map<Element, int> where;
  for (int v : out.phi) where.emplace(b.element(v), v);

  for (int v : out.phi) {
    if (sbar_same_component(b.group, b.element(v), anchor))
      out.psi1.push_back(v);
    else
      out.psi2.push_back(v);
  }

  // The second half must be exactly the inverses of the first.
  for (int v : out.psi1) {
    Element inv = b.group.inverse(b.element(v));
    auto it = where.find(inv);
    if (it == where.end())
      throw HypothesisViolated("inverse of " + b.graph.label(v) + " missing from component");
    if (sbar_same_component(b.group, inv, anchor))
      throw HypothesisViolated("inverse of " + b.graph.label(v) + " landed in the same half");
    out.inversion_pairs.emplace_back(v, it->second);
  }
  if (out.psi1.size() != out.psi2.size())
    throw HypothesisViolated("halves of the component have different sizes");

  // Cross-check against connectivity of the positive-exponent graph
  // restricted to the component: each half is one connected piece and no
  // positive-exponent edge crosses between halves.
  std::map<int, int> pos;
  std::vector<Element> elems;
  for (int v : out.phi) {
    pos.emplace(v, (int)elems.size());
    elems.push_back(b.element(v));
  }
  std::size_t n = elems.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool e = directed_adjacent(b.group, elems[i], elems[j], Variant::Nplus) ||
               directed_adjacent(b.group, elems[j], elems[i], Variant::Nplus);
      if (e) {
        adj[i].push_back((int)j);
        adj[j].push_back((int)i);
      }
    }
  std::vector<int> mark(n, -1);
  for (int side = 0; side < 2; ++side) {
    const std::vector<int>& half = side == 0 ? out.psi1 : out.psi2;
    std::vector<int> stack{pos.at(half.front())};
    if (mark[stack[0]] >= 0) throw HypothesisViolated("halves are connected to each other");
    mark[stack[0]] = side;
    std::size_t seen = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj[v]) {
        if (mark[u] == side) continue;
        if (mark[u] >= 0) throw HypothesisViolated("positive-exponent edge crosses between halves");
        mark[u] = side;
        ++seen;
        stack.push_back(u);
      }
    }
    if (seen != half.size())
      throw HypothesisViolated("a half is disconnected in the positive-exponent graph");
  }
  for (int v : out.psi1)
    if (mark[pos.at(v)] != 0) throw HypothesisViolated("half membership disagrees with connectivity");
  return out;
}

struct BoxtimesReport {
  bool psi1_iso_psi2 = false;
  bool phi_iso_psi1_boxtimes_p2 = false;
  bool psi1_iso_twin_quotient = false;
  bool all() const { return psi1_iso_psi2 && phi_iso_psi1_boxtimes_p2 && psi1_iso_twin_quotient; }
};

// Induced positive-exponent graph on a set of carrier vertices.
inline SimpleGraph positive_graph_on(const PowerGraphBundle& b, const std::vector<int>& verts) {
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (int v : verts) labels.push_back(b.graph.label(v));
  SimpleGraph out(std::move(labels));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      const Element& x = b.element(verts[i]);
      const Element& y = b.element(verts[j]);
      if (directed_adjacent(b.group, x, y, Variant::Nplus) ||
          directed_adjacent(b.group, y, x, Variant::Nplus))
        out.add_edge((int)i, (int)j);
    }
  return out;
}

// Checks the three structural facts about a split component of a
// nonzero-exponent graph: the halves are isomorphic, the component is the
// strong product of a half with a single edge, and the half is the
// component's quotient by twin classes.
inline BoxtimesReport verify_boxtimes_decomposition(const PowerGraphBundle& b, const ComponentSplit& s) {
  BoxtimesReport rep;
  SimpleGraph g1 = positive_graph_on(b, s.psi1);
  SimpleGraph g2 = positive_graph_on(b, s.psi2);
  rep.psi1_iso_psi2 = find_isomorphism(g1, g2).has_value();

  SimpleGraph phi = induced(b.graph, s.phi);
  std::vector<std::string> p2_labels{"1", "2"};
  SimpleGraph p2(p2_labels);
  p2.add_edge(0, 1);
  SimpleGraph prod = strong_product(g1, p2);
  rep.phi_iso_psi1_boxtimes_p2 = find_isomorphism(phi, prod).has_value();

  // Quotient by the twin relation of the infinite graph.  Within a
  // torsion-free component its classes are exactly the inverse pairs, which
  // the split already carries; the window's own twin partition can be
  // coarser when a small component happens to be complete.
  std::map<int, int> pos;
  for (std::size_t i = 0; i < s.phi.size(); ++i) pos.emplace(s.phi[i], (int)i);
  TwinPartition pairs;
  for (auto [u, v] : s.inversion_pairs)
    pairs.blocks.push_back({pos.at(u), pos.at(v)});
  SimpleGraph quot = quotient_by_twins(phi, pairs);
  rep.psi1_iso_twin_quotient = find_isomorphism(quot, g1).has_value();
  return rep;
}

// Turns an isomorphism of nonzero-exponent window graphs into one of the
// all-integers window graphs over the same carriers: compose with the
// transposition swapping the image of the identity with the identity.
// Both the input and the output map are verified.
inline std::vector<int> lift_pm_iso_to_power_iso(const PowerGraphBundle& pm_g,
                                                 const PowerGraphBundle& pm_h,
                                                 const PowerGraphBundle& z_g,
                                                 const PowerGraphBundle& z_h,
                                                 const std::vector<int>& phi) {
  if (pm_g.variant != Variant::Zpm || pm_h.variant != Variant::Zpm)
    throw PreconditionFailed("lift expects nonzero-exponent source bundles");
  if (z_g.variant != Variant::Z || z_h.variant != Variant::Z)
    throw PreconditionFailed("lift expects all-integers target bundles");
  if (pm_g.carrier != z_g.carrier || pm_h.carrier != z_h.carrier)
    throw PreconditionFailed("lift expects matching carriers per group");
  if (!is_isomorphism(pm_g.graph, pm_h.graph, phi))
    throw NotAnIsomorphism("map is not an isomorphism of the nonzero-exponent graphs");

  int e_h = pm_h.identity_index;
  int phi_e = phi[pm_g.identity_index];
  std::vector<int> out(phi);
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v] == e_h)
      out[v] = phi_e;
    else if (out[v] == phi_e)
      out[v] = e_h;
  }
  if (!is_isomorphism(z_g.graph, z_h.graph, out))
    throw NotAnIsomorphism("lifted map fails on the all-integers graphs");
  return out;
}

enum class MatchDirection { PlusFromPm, PmFromPlus };

struct MatchResult {
  std::optional<std::vector<int>> map;
  std::string evidence;
};

namespace detail {

inline std::vector<int> torsion_slice(const PowerGraphBundle& b) {
  std::vector<int> out;
  for (std::size_t v = 0; v < b.carrier.size(); ++v)
    if (b.group.element_order(b.element(v))) out.push_back((int)v);
  return out;
}

struct ComponentKey {
  std::size_t vertices;
  std::size_t edges;
  std::vector<int> degrees;
  friend auto operator<=>(const ComponentKey&, const ComponentKey&) = default;
};

inline ComponentKey key_of(const SimpleGraph& g) {
  ComponentKey k;
  k.vertices = g.vertex_count();
  k.edges = g.edge_count();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) k.degrees.push_back(g.degree((int)v));
  std::sort(k.degrees.begin(), k.degrees.end());
  return k;
}

}  // namespace detail

// Builds an isomorphism of one variant's window graphs out of the other
// variant's pair, by matching torsion slices directly and infinite-order
// components through their half/double structure.  Returns the map on the
// target variant, or nullopt with evidence naming the first obstruction.
inline MatchResult match_variant_isomorphism(const PowerGraphBundle& g_plus,
                                             const PowerGraphBundle& g_pm,
                                             const PowerGraphBundle& h_plus,
                                             const PowerGraphBundle& h_pm, MatchDirection dir) {
  if (g_plus.variant != Variant::Nplus || h_plus.variant != Variant::Nplus ||
      g_pm.variant != Variant::Zpm || h_pm.variant != Variant::Zpm)
    throw PreconditionFailed("variant matching expects a positive and a nonzero bundle per group");
  if (g_plus.carrier != g_pm.carrier || h_plus.carrier != h_pm.carrier)
    throw PreconditionFailed("variant matching expects matching carriers per group");

  MatchResult res;
  const PowerGraphBundle& tg = dir == MatchDirection::PlusFromPm ? g_plus : g_pm;
  const PowerGraphBundle& th = dir == MatchDirection::PlusFromPm ? h_plus : h_pm;

  std::vector<int> map(g_pm.carrier.size(), -1);

  // Torsion slices carry the same graph in every variant; match them as
  // whole induced subgraphs.
  std::vector<int> tor_g = detail::torsion_slice(g_pm);
  std::vector<int> tor_h = detail::torsion_slice(h_pm);
  SimpleGraph tg_graph = induced(tg.graph, tor_g);
  SimpleGraph th_graph = induced(th.graph, tor_h);
  if (tor_g.size() != tor_h.size()) {
    res.evidence = "torsion slices have sizes " + std::to_string(tor_g.size()) + " and " +
                   std::to_string(tor_h.size());
    return res;
  }
  auto tor_iso = find_isomorphism(tg_graph, th_graph);
  if (!tor_iso) {
    res.evidence = "torsion slices are not isomorphic";
    return res;
  }
  for (std::size_t i = 0; i < tor_g.size(); ++i) map[tor_g[i]] = tor_h[(*tor_iso)[i]];

  // Infinite-order components, taken from the nonzero-exponent graphs so
  // the half/double structure is available on both sides.
  auto infinite_components = [](const PowerGraphBundle& b) {
    std::vector<std::vector<int>> out;
    for (const auto& comp : connected_components(b.graph)) {
      bool torsion = false;
      for (int v : comp) torsion |= b.group.element_order(b.element(v)).has_value();
      if (!torsion) out.push_back(comp);
    }
    return out;
  };
  std::vector<std::vector<int>> comps_g = infinite_components(g_pm);
  std::vector<std::vector<int>> comps_h = infinite_components(h_pm);
  if (comps_g.size() != comps_h.size()) {
    res.evidence = "different numbers of infinite-order components: " +
                   std::to_string(comps_g.size()) + " vs " + std::to_string(comps_h.size());
    return res;
  }

  // Bucket components by isomorphism type of the structure the source
  // variant sees: the whole component for the nonzero graph, its positive
  // half for the positive graph.
  bool source_is_pm = dir == MatchDirection::PlusFromPm;
  struct CompInfo {
    std::vector<int> verts;
    ComponentSplit split;
    SimpleGraph shape;  // graph used for bucketing
  };
  auto describe = [&](const PowerGraphBundle& pm, const std::vector<int>& comp) {
    CompInfo info;
    info.verts = comp;
    info.split = split_component(pm, comp);
    info.shape = source_is_pm ? induced(pm.graph, info.split.phi) : positive_graph_on(pm, info.split.psi1);
    return info;
  };
  std::vector<CompInfo> infos_g, infos_h;
  for (const auto& c : comps_g) infos_g.push_back(describe(g_pm, c));
  for (const auto& c : comps_h) infos_h.push_back(describe(h_pm, c));

  std::vector<bool> used(infos_h.size(), false);
  for (auto& ig : infos_g) {
    detail::ComponentKey kg = detail::key_of(ig.shape);
    int found = -1;
    std::optional<std::vector<int>> shape_iso;
    for (std::size_t j = 0; j < infos_h.size(); ++j) {
      if (used[j]) continue;
      if (detail::key_of(infos_h[j].shape) != kg) continue;
      shape_iso = find_isomorphism(ig.shape, infos_h[j].shape);
      if (shape_iso) {
        found = (int)j;
        break;
      }
    }
    if (found < 0) {
      res.evidence = "no partner for a component with " + std::to_string(ig.split.phi.size()) +
                     " vertices anchored at " + g_pm.graph.label(ig.split.phi.front());
      return res;
    }
    used[found] = true;
    const CompInfo& ih = infos_h[found];

    // Positive-half isomorphism between the matched components.  When the
    // source was the nonzero graph this exists because isomorphic doubles
    // have isomorphic twin quotients, i.e. isomorphic halves.
    SimpleGraph half_g = positive_graph_on(g_pm, ig.split.psi1);
    SimpleGraph half_h = positive_graph_on(h_pm, ih.split.psi1);
    auto psi1 = find_isomorphism(half_g, half_h);
    if (!psi1) {
      res.evidence = "matched components have non-isomorphic positive halves";
      return res;
    }
    std::map<Element, int> where_h;
    for (int v : ih.split.phi) where_h.emplace(h_pm.element(v), v);
    for (std::size_t i = 0; i < ig.split.psi1.size(); ++i)
      map[ig.split.psi1[i]] = ih.split.psi1[(*psi1)[i]];
    for (int v : ig.split.psi2) {
      Element inv_g = g_pm.group.inverse(g_pm.element(v));
      int iv = -1;
      for (std::size_t i = 0; i < ig.split.psi1.size(); ++i)
        if (g_pm.element(ig.split.psi1[i]) == inv_g) {
          iv = ig.split.psi1[i];
          break;
        }
      if (iv < 0) throw HypothesisViolated("inverse pairing broke during matching");
      Element img_inv = h_pm.element(map[iv]);
      auto it = where_h.find(h_pm.group.inverse(img_inv));
      if (it == where_h.end()) throw HypothesisViolated("image component is not inversion closed");
      map[v] = it->second;
    }
  }

  for (int v : map)
    if (v < 0) throw HypothesisViolated("matching left a vertex unmapped");
  if (!is_isomorphism(tg.graph, th.graph, map)) {
    res.evidence = "assembled map fails to be an isomorphism of the target graphs";
    return res;
  }
  res.map = map;
  return res;
}

// Census of a window graph's connected components by isomorphism type,
// in order of first appearance.
struct MultiplicityTable {
  struct Entry {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    int count = 0;
    std::vector<int> component_ids;
    std::string representative_label;
  };
  std::vector<std::vector<int>> components;
  std::vector<Entry> entries;
};

inline MultiplicityTable multiplicity_table(const PowerGraphBundle& b) {
  MultiplicityTable out;
  out.components = connected_components(b.graph);
  std::vector<SimpleGraph> reps;
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    SimpleGraph shape = induced(b.graph, out.components[c]);
    int found = -1;
    for (std::size_t e = 0; e < out.entries.size(); ++e) {
      if (out.entries[e].vertices != shape.vertex_count() || out.entries[e].edges != shape.edge_count())
        continue;
      if (find_isomorphism(reps[e], shape)) {
        found = (int)e;
        break;
      }
    }
    if (found < 0) {
      MultiplicityTable::Entry entry;
      entry.vertices = shape.vertex_count();
      entry.edges = shape.edge_count();
      entry.count = 0;
      entry.representative_label = b.graph.label(out.components[c].front());
      out.entries.push_back(entry);
      reps.push_back(shape);
      found = (int)out.entries.size() - 1;
    }
    ++out.entries[found].count;
    out.entries[found].component_ids.push_back((int)c);
  }
  return out;
}

struct DoublingReport {
  bool holds = false;
  std::size_t pm_infinite_components = 0;
  std::size_t plus_infinite_components = 0;
  std::string evidence;
};

// The positive-exponent window graph has exactly twice as many infinite-order
// components as the nonzero-exponent one, twinned class by class: every class
// of the nonzero census corresponds to a positive class of doubled count.
inline DoublingReport verify_component_doubling(const PowerGraphBundle& plus_b,
                                                const PowerGraphBundle& pm_b) {
  if (plus_b.variant != Variant::Nplus || pm_b.variant != Variant::Zpm)
    throw PreconditionFailed("doubling check expects a positive and a nonzero bundle");
  if (plus_b.carrier != pm_b.carrier)
    throw PreconditionFailed("doubling check expects matching carriers");

  DoublingReport rep;
  MultiplicityTable tpm = multiplicity_table(pm_b);
  MultiplicityTable tpl = multiplicity_table(plus_b);

  auto comp_is_torsion = [](const PowerGraphBundle& b, const std::vector<int>& comp) {
    for (int v : comp)
      if (b.group.element_order(b.element(v))) return true;
    return false;
  };
  std::vector<int> plus_comp_of(pm_b.carrier.size(), -1);
  for (std::size_t c = 0; c < tpl.components.size(); ++c)
    for (int v : tpl.components[c]) plus_comp_of[v] = (int)c;
  std::vector<int> plus_entry_of(tpl.components.size(), -1);
  for (std::size_t e = 0; e < tpl.entries.size(); ++e)
    for (int c : tpl.entries[e].component_ids) plus_entry_of[c] = (int)e;

  std::map<int, int> partner;  // pm entry id -> plus entry id
  for (std::size_t e = 0; e < tpm.entries.size(); ++e) {
    for (int cid : tpm.entries[e].component_ids) {
      const std::vector<int>& comp = tpm.components[cid];
      if (comp_is_torsion(pm_b, comp)) continue;
      ++rep.pm_infinite_components;
      ComponentSplit split = split_component(pm_b, comp);
      for (const std::vector<int>* half : {&split.psi1, &split.psi2}) {
        // Each half must be exactly one component of the positive graph,
        // and all halves arising from one nonzero class must land in one
        // positive class.
        std::vector<int> sorted = *half;
        std::sort(sorted.begin(), sorted.end());
        int c = plus_comp_of[half->front()];
        if (tpl.components[c] != sorted) {
          rep.evidence = "half anchored at " + pm_b.graph.label(half->front()) +
                         " is not a positive-graph component";
          return rep;
        }
        auto [it, fresh] = partner.emplace((int)e, plus_entry_of[c]);
        if (!fresh && it->second != plus_entry_of[c]) {
          rep.evidence = "halves of one nonzero class fall into different positive classes";
          return rep;
        }
      }
      SimpleGraph half_shape = positive_graph_on(pm_b, split.psi1);
      SimpleGraph other_shape = positive_graph_on(pm_b, split.psi2);
      if (!find_isomorphism(half_shape, other_shape)) {
        rep.evidence = "halves of component anchored at " + pm_b.graph.label(split.phi.front()) +
                       " are not isomorphic";
        return rep;
      }
    }
  }

  std::map<int, int> pm_infinite_count, plus_infinite_count;  // entry id -> component count
  for (std::size_t e = 0; e < tpm.entries.size(); ++e)
    for (int cid : tpm.entries[e].component_ids)
      if (!comp_is_torsion(pm_b, tpm.components[cid])) ++pm_infinite_count[(int)e];
  for (std::size_t e = 0; e < tpl.entries.size(); ++e)
    for (int cid : tpl.entries[e].component_ids)
      if (!comp_is_torsion(plus_b, tpl.components[cid])) {
        ++plus_infinite_count[(int)e];
        ++rep.plus_infinite_components;
      }

  std::set<int> claimed;
  for (const auto& [pme, ple] : partner) {
    if (plus_infinite_count[ple] != 2 * pm_infinite_count[pme]) {
      rep.evidence = "class multiplicities " + std::to_string(pm_infinite_count[pme]) + " vs " +
                     std::to_string(plus_infinite_count[ple]);
      return rep;
    }
    if (!claimed.insert(ple).second) {
      rep.evidence = "two nonzero classes claim the same positive class";
      return rep;
    }
  }
  for (const auto& [ple, cnt] : plus_infinite_count) {
    if (cnt > 0 && !claimed.count(ple)) {
      rep.evidence = "a positive class with " + std::to_string(cnt) + " components has no partner";
      return rep;
    }
  }
  rep.holds = rep.plus_infinite_components == 2 * rep.pm_infinite_components;
  if (!rep.holds && rep.evidence.empty())
    rep.evidence = "component counts " + std::to_string(rep.plus_infinite_components) + " vs " +
                   std::to_string(rep.pm_infinite_components);
  return rep;
}

}  // namespace powergraph
