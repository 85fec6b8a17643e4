#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "powergraph/catalog.hpp"
#include "powergraph/direction.hpp"
#include "powergraph/errors.hpp"
#include "powergraph/graphs.hpp"
#include "powergraph/groups.hpp"
#include "powergraph/io.hpp"
#include "powergraph/power_graph.hpp"
#include "powergraph/transforms.hpp"

namespace powergraph {

enum class SuiteProfile { Quick, Desk };

struct SuiteOptions {
  SuiteProfile profile = SuiteProfile::Desk;
  int jobs = 1;
  std::uint64_t seed = 12345;
  std::size_t cap = default_resource_cap();
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string evidence;
  double millis = 0.0;
};

enum class ArtifactFormat { Dot, Json };

// The one build-and-render path, shared by the command line front end and
// the determinism criterion.
inline std::string render_graph_artifact(const GroupHandle& g, const WindowSpec& w, Variant v,
                                         bool directed, ArtifactFormat f,
                                         std::size_t cap = default_resource_cap()) {
  PowerGraphBundle b = build_power_graph(g, w, v, cap);
  switch (f) {
    case ArtifactFormat::Dot:
      return directed ? to_dot(b.digraph, "powergraph") : to_dot(b.graph, "powergraph");
    case ArtifactFormat::Json: {
      nlohmann::json j = directed ? to_json(b.digraph) : to_json(b.graph);
      j["group"] = g.name();
      j["window"] = w.str();
      j["variant"] = variant_name(v);
      return j.dump(2) + "\n";
    }
  }
  throw ConfigError("unhandled artifact format");
}

namespace suite_detail {

inline bool quick(const SuiteOptions& o) { return o.profile == SuiteProfile::Quick; }

inline std::vector<int> component_of(const PowerGraphBundle& b, const Element& x) {
  int target = b.index_of(x);
  for (const auto& comp : connected_components(b.graph))
    for (int v : comp)
      if (v == target) return comp;
  throw UnknownVertex("element not in any component");
}

inline std::vector<std::vector<int>> nontrivial_components(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for (auto& comp : connected_components(g))
    if (comp.size() >= 2) out.push_back(std::move(comp));
  return out;
}

// Random automorphism from the twin structure: each two-element twin class
// is swapped or kept, independently.
inline std::vector<int> random_twin_swap(const SimpleGraph& g, std::mt19937_64& rng) {
  std::vector<int> phi((std::size_t)g.vertex_count());
  for (std::size_t v = 0; v < phi.size(); ++v) phi[v] = (int)v;
  for (const auto& block : twin_partition(g).blocks)
    if (block.size() == 2 && (rng() & 1)) std::swap(phi[block[0]], phi[block[1]]);
  return phi;
}

// Growth-oracle verdict with one base retry: a window pair drawn near the
// probe base can straddle it, so an inconclusive read doubles the base once
// before counting as a disagreement.
inline GrowthVerdict decisive_growth_verdict(const GroupHandle& g, const Element& x,
                                             const Element& y, WindowSpec base) {
  GrowthProbe probe = s_set_growth_probe(g, x, y, base);
  if (probe.verdict != GrowthVerdict::Inconclusive) return probe.verdict;
  return s_set_growth_probe(g, x, y, scale_window(base, 2)).verdict;
}

inline CriterionResult crit_torsion_coincidence(const SuiteOptions& o) {
  CriterionResult res{"01-torsion-coincidence", false, "", 0.0};
  int max_n = quick(o) ? 16 : 32;
  std::vector<GroupHandle> groups{symmetric_group_3(), quaternion_group_8()};
  for (int n = 2; n <= max_n; ++n) groups.push_back(cyclic_group(n));
  std::size_t mismatches = 0;
  for (const GroupHandle& g : groups) {
    PowerGraphBundle bz = build_power_graph(g, WindowSpec::full(), Variant::Z, o.cap);
    PowerGraphBundle bp = build_power_graph(g, WindowSpec::full(), Variant::Nplus, o.cap);
    PowerGraphBundle bpm = build_power_graph(g, WindowSpec::full(), Variant::Zpm, o.cap);
    if (!(bz.graph == bp.graph)) ++mismatches;
    if (!(bz.graph == bpm.graph)) ++mismatches;
  }
  res.pass = mismatches == 0;
  std::ostringstream ev;
  ev << groups.size() << " torsion groups, three exponent domains each, " << mismatches
     << " edge-set mismatches";
  res.evidence = ev.str();
  return res;
}

inline CriterionResult crit_isolated_vertex(const SuiteOptions& o) {
  CriterionResult res{"02-isolated-vertex", false, "", 0.0};
  int n = quick(o) ? 6 : 12;
  int r = quick(o) ? 2 : 3;
  int hb = 2;
  struct Case {
    GroupHandle g;
    WindowSpec w;
  };
  std::vector<Case> torsion_free{{GroupHandle::integers(), WindowSpec::integers(n)},
                                 {make_group("rationals"), WindowSpec::rationals(r, r)},
                                 {make_group("z-inv-2"), WindowSpec::rationals(r, 2 * r)},
                                 {GroupHandle::heisenberg(), WindowSpec::heisenberg(hb)}};
  bool ok = true;
  std::ostringstream ev;
  for (const Case& c : torsion_free) {
    PowerGraphBundle b = build_power_graph(c.g, c.w, Variant::Zpm, o.cap);
    std::vector<int> isolated;
    for (int v = 0; v < (int)b.graph.vertex_count(); ++v)
      if (b.graph.degree(v) == 0) isolated.push_back(v);
    bool good = isolated.size() == 1 && isolated.front() == b.identity_index;
    ok &= good;
    ev << c.g.name() << ":" << isolated.size() << " ";
  }
  for (const std::string& name : {"z6", "z8", "s3", "q8"}) {
    GroupHandle g = make_group(name);
    PowerGraphBundle b = build_power_graph(g, WindowSpec::full(), Variant::Zpm, o.cap);
    std::size_t isolated = 0;
    for (int v = 0; v < (int)b.graph.vertex_count(); ++v)
      if (b.graph.degree(v) == 0) ++isolated;
    ok &= isolated == 0;
    ev << name << ":" << isolated << " ";
  }
  res.pass = ok;
  res.evidence = "isolated vertex counts (torsion-free want 1, torsion want 0): " + ev.str();
  return res;
}

inline CriterionResult crit_z_twin_signature(const SuiteOptions& o) {
  CriterionResult res{"03-z-twin-signature", false, "", 0.0};
  std::vector<std::int64_t> windows = quick(o) ? std::vector<std::int64_t>{10, 25}
                                               : std::vector<std::int64_t>{20, 50};
  GroupHandle g = GroupHandle::integers();
  bool ok = true;
  std::ostringstream ev;
  for (std::int64_t n : windows) {
    PowerGraphBundle b = build_power_graph(g, WindowSpec::integers(n), Variant::Z, o.cap);
    EquivClassProfile prof = equiv_class_profile(b);
    bool blocks_ok = true;
    for (const auto& block : prof.window_partition.blocks) {
      bool has_e = false;
      for (int v : block) has_e |= v == b.identity_index;
      if (has_e) {
        std::vector<std::int64_t> vals;
        for (int v : block) vals.push_back(std::get<std::int64_t>(b.element(v)));
        std::sort(vals.begin(), vals.end());
        blocks_ok &= vals == std::vector<std::int64_t>{-1, 0, 1};
      } else {
        blocks_ok &= block.size() == 2 &&
                     std::get<std::int64_t>(b.element(block[0])) ==
                         -std::get<std::int64_t>(b.element(block[1]));
      }
    }
    bool good = prof.z_signature && prof.window_matches_symbolic && blocks_ok;
    ok &= good;
    ev << "N=" << n << (good ? " ok" : " FAIL") << " ";
  }
  res.pass = ok;
  res.evidence = "one {0,1,-1} class, inverse pairs elsewhere, window agrees with symbolic: " + ev.str();
  return res;
}

inline CriterionResult crit_boxtimes(const SuiteOptions& o) {
  CriterionResult res{"04-boxtimes-decomposition", false, "", 0.0};
  struct Case {
    GroupHandle g;
    WindowSpec w;
    Element anchor;
  };
  std::vector<Case> cases;
  if (quick(o)) {
    cases.push_back({GroupHandle::integers(), WindowSpec::integers(6), Element((std::int64_t)1)});
    cases.push_back({make_group("rationals"), WindowSpec::rationals(2, 2), Element(Rational(1))});
    cases.push_back({GroupHandle::heisenberg(), WindowSpec::heisenberg(2), Element(HTriple{1, 0, 0})});
  } else {
    cases.push_back({GroupHandle::integers(), WindowSpec::integers(12), Element((std::int64_t)1)});
    cases.push_back({make_group("rationals"), WindowSpec::rationals(3, 3), Element(Rational(1))});
    cases.push_back({GroupHandle::heisenberg(), WindowSpec::heisenberg(3), Element(HTriple{1, 0, 0})});
  }
  bool ok = true;
  std::ostringstream ev;
  for (const Case& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    PowerGraphBundle b = build_power_graph(c.g, c.w, Variant::Zpm, o.cap);
    ComponentSplit split = split_component(b, component_of(b, c.anchor));
    BoxtimesReport rep = verify_boxtimes_decomposition(b, split);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    bool good = rep.all() && ms < 5000.0;
    ok &= good;
    ev << c.g.name() << ":" << (rep.psi1_iso_psi2 ? "T" : "F") << (rep.phi_iso_psi1_boxtimes_p2 ? "T" : "F")
       << (rep.psi1_iso_twin_quotient ? "T" : "F") << " " << (int)ms << "ms ";
  }
  res.pass = ok;
  res.evidence = "halves iso, strong-product iso, twin-quotient iso: " + ev.str();
  return res;
}

inline CriterionResult crit_doubling(const SuiteOptions& o) {
  CriterionResult res{"05-component-doubling", false, "", 0.0};
  struct Case {
    GroupHandle g;
    WindowSpec w;
  };
  int n = quick(o) ? 5 : 10;
  int r = quick(o) ? 2 : 3;
  std::vector<Case> cases{{GroupHandle::integers(), WindowSpec::integers(n)},
                          {make_group("rationals"), WindowSpec::rationals(r, r)},
                          {make_group("z-inv-2"), WindowSpec::rationals(r, 4)},
                          {GroupHandle::heisenberg(), WindowSpec::heisenberg(2)}};
  bool ok = true;
  std::ostringstream ev;
  for (const Case& c : cases) {
    PowerGraphBundle plus = build_power_graph(c.g, c.w, Variant::Nplus, o.cap);
    PowerGraphBundle pm = build_power_graph(c.g, c.w, Variant::Zpm, o.cap);
    DoublingReport rep = verify_component_doubling(plus, pm);
    ok &= rep.holds;
    ev << c.g.name() << ":" << rep.plus_infinite_components << "=2x" << rep.pm_infinite_components
       << (rep.holds ? " " : " FAIL(" + rep.evidence + ") ");
  }
  res.pass = ok;
  res.evidence = "positive-domain components vs merged classes: " + ev.str();
  return res;
}

inline CriterionResult crit_tau_lift(const SuiteOptions& o) {
  CriterionResult res{"06-tau-lift", false, "", 0.0};
  struct Case {
    GroupHandle g;
    WindowSpec w;
    int draws;
  };
  std::vector<Case> cases{{GroupHandle::integers(), WindowSpec::integers(quick(o) ? 5 : 10), 100},
                          {GroupHandle::heisenberg(), WindowSpec::heisenberg(2), 100}};
  std::mt19937_64 rng(o.seed);
  int ok_count = 0, total = 0;
  for (const Case& c : cases) {
    PowerGraphBundle pm = build_power_graph(c.g, c.w, Variant::Zpm, o.cap);
    PowerGraphBundle z = build_power_graph(c.g, c.w, Variant::Z, o.cap);
    for (int i = 0; i < c.draws; ++i) {
      ++total;
      std::vector<int> phi = random_twin_swap(pm.graph, rng);
      try {
        std::vector<int> lifted = lift_pm_iso_to_power_iso(pm, pm, z, z, phi);
        if (is_isomorphism(z.graph, z.graph, lifted)) ++ok_count;
      } catch (const Error&) {
        // counted as a failure below
      }
    }
  }
  res.pass = ok_count == total;
  res.evidence = std::to_string(ok_count) + "/" + std::to_string(total) +
                 " lifted maps verified on the all-integers graphs";
  return res;
}

inline CriterionResult crit_orientation(const SuiteOptions& o) {
  CriterionResult res{"07-orientation-recovery", false, "", 0.0};
  std::vector<std::int64_t> windows = quick(o) ? std::vector<std::int64_t>{15, 30}
                                               : std::vector<std::int64_t>{30, 60};
  GroupHandle g = GroupHandle::integers();
  std::size_t pairs = 0, agree = 0, growth_checked = 0, growth_ok = 0;
  for (std::int64_t n : windows) {
    for (std::int64_t x = -n; x <= n; ++x) {
      if (x == 0) continue;
      for (std::int64_t y = -n; y <= n; ++y) {
        if (y == 0 || y == x || y == -x) continue;
        bool fwd = y % x == 0;
        bool bwd = x % y == 0;
        if (!fwd && !bwd) continue;
        ++pairs;
        Orientation got = recover_orientation(g, Element(x), Element(y));
        if ((got == Orientation::XtoY) == fwd) ++agree;
        if (fwd) {
          // Arc x -> y: the reverse s-set must grow without bound.
          ++growth_checked;
          GrowthProbe probe = s_set_growth_probe(g, Element(y), Element(x), WindowSpec::integers(n));
          if (probe.verdict == GrowthVerdict::Infinite) ++growth_ok;
        }
      }
    }
  }
  res.pass = pairs > 0 && agree == pairs && growth_ok == growth_checked;
  std::ostringstream ev;
  ev << agree << "/" << pairs << " orientations agree with ground truth; " << growth_ok << "/"
     << growth_checked << " reverse s-sets grow strictly over three doublings";
  res.evidence = ev.str();
  return res;
}

inline CriterionResult crit_oracle_agreement(const SuiteOptions& o) {
  CriterionResult res{"08-oracle-agreement", false, "", 0.0};
  std::size_t pairs = 0, disagree = 0;

  std::int64_t n = quick(o) ? 15 : 30;
  GroupHandle zg = GroupHandle::integers();
  for (std::int64_t x = -n; x <= n; ++x) {
    if (x == 0) continue;
    for (std::int64_t y = -n; y <= n; ++y) {
      if (y == 0 || y == x || y == -x) continue;
      ++pairs;
      bool fin = s_set_is_finite(zg, Element(x), Element(y));
      GrowthVerdict v = decisive_growth_verdict(zg, Element(x), Element(y), WindowSpec::integers(2 * n));
      if (v != (fin ? GrowthVerdict::Finite : GrowthVerdict::Infinite)) ++disagree;
    }
  }

  int r = quick(o) ? 3 : 4;
  for (const std::string& name : {"z-inv-2", "height-one"}) {
    GroupHandle g = make_group(name);
    std::vector<Element> carrier = g.window_carrier(WindowSpec::rationals(r, r));
    for (const Element& ex : carrier) {
      if (ex == g.identity()) continue;
      for (const Element& ey : carrier) {
        if (ey == g.identity() || ey == ex || ey == g.inverse(ex)) continue;
        ++pairs;
        bool fin = s_set_is_finite(g, ex, ey);
        GrowthVerdict v = decisive_growth_verdict(g, ex, ey, WindowSpec::rationals(2 * r, 2 * r));
        if (v != (fin ? GrowthVerdict::Finite : GrowthVerdict::Infinite)) ++disagree;
      }
    }
  }
  res.pass = pairs >= 500 && disagree == 0;
  res.evidence = std::to_string(pairs) + " pairs across three groups, " + std::to_string(disagree) +
                 " symbolic/growth disagreements";
  return res;
}

inline CriterionResult crit_phi_a(const SuiteOptions& o) {
  CriterionResult res{"09-phi-a", false, "", 0.0};
  GroupHandle g = make_group("rationals");
  int r = quick(o) ? 2 : 4;
  bool ok = true;
  std::ostringstream ev;
  for (std::int64_t a = 1; a <= 3; ++a) {
    std::vector<Element> carrier = phi_a_closed_carrier(g, Rational(a), WindowSpec::rationals(r, r));
    PowerGraphBundle b = build_power_graph_from_carrier(g, carrier, Variant::Zpm, WindowSpec::full(), o.cap);
    PhiAReport rep = verify_phi_a(b, Rational(a));
    ok &= rep.all();
    ev << "a=" << a << ":" << (rep.involution ? "T" : "F") << (rep.adjacency_preserved ? "T" : "F")
       << (rep.arcs_reversed ? "T" : "F") << (rep.in_slice_maps_onto_out_slice ? "T" : "F") << " ";
  }
  res.pass = ok;
  res.evidence = "involution, adjacency, arc reversal, I(a)->O(a): " + ev.str();
  return res;
}

inline CriterionResult crit_q_detection(const SuiteOptions& o) {
  (void)o;
  CriterionResult res{"10-q-detection", false, "", 0.0};
  struct Case {
    std::string name;
    HeightFunction h;
  };
  std::vector<Case> cases{{"rationals", HeightFunction::all_of_q()},
                          {"integers", HeightFunction::integers()},
                          {"z-inv-2", HeightFunction::inverted_prime(2)},
                          {"z-inv-6", HeightFunction(0, {{2, std::nullopt}, {3, std::nullopt}})},
                          {"height-one", HeightFunction(1, {})},
                          {"all-but-2", HeightFunction(std::nullopt, {{2, 0}})}};
  bool ok = true;
  std::size_t positives = 0;
  std::ostringstream ev;
  for (const Case& c : cases) {
    GroupHandle g = GroupHandle::rational_subgroup(c.h);
    bool by_symmetry = is_rationals_by_neighbor_symmetry(g);
    bool by_heights = classify_rational_subgroup(c.h).is_q;
    ok &= by_symmetry == by_heights;
    if (by_symmetry) ++positives;
    ev << c.name << ":" << (by_symmetry ? "Q" : "-") << (by_symmetry == by_heights ? " " : "! ");
  }
  ok &= positives == 1;
  res.pass = ok;
  res.evidence = "neighbor-symmetry vs height classification: " + ev.str();
  return res;
}

inline CriterionResult crit_directed_transfer(const SuiteOptions& o) {
  CriterionResult res{"11-directed-transfer", false, "", 0.0};
  struct Case {
    GroupHandle g;
    WindowSpec w;
  };
  std::vector<Case> cases{{GroupHandle::heisenberg(), WindowSpec::heisenberg(2)},
                          {GroupHandle::integers(), WindowSpec::integers(quick(o) ? 5 : 10)}};
  std::mt19937_64 rng(o.seed + 11);
  std::size_t runs = 0, clean = 0, lc_comps = 0, lc_ok = 0;
  for (const Case& c : cases) {
    PowerGraphBundle b = build_power_graph(c.g, c.w, Variant::Zpm, o.cap);
    std::vector<std::vector<int>> maps;
    std::vector<int> ident((std::size_t)b.graph.vertex_count());
    for (std::size_t v = 0; v < ident.size(); ++v) ident[v] = (int)v;
    maps.push_back(ident);
    std::vector<int> inv(ident);
    for (std::size_t v = 0; v < inv.size(); ++v)
      inv[v] = b.index_of(b.group.inverse(b.element((int)v)));
    maps.push_back(inv);
    for (int i = 0; i < 20; ++i) maps.push_back(random_twin_swap(b.graph, rng));

    std::vector<std::vector<int>> comps = nontrivial_components(b.graph);
    for (const auto& phi : maps)
      for (const auto& comp : comps) {
        ++runs;
        TransferReport rep = check_directed_transfer(b, b, phi, comp);
        if (rep.clean() && rep.io_slices_match) ++clean;
      }
    if (c.g.family() == Family::HeisenbergZ) {
      for (const auto& comp : comps) {
        ++lc_comps;
        if (locally_cyclic_component_check(b, comp, 2 * c.w.bound)) ++lc_ok;
      }
    }
  }
  res.pass = runs > 0 && clean == runs && lc_ok == lc_comps;
  std::ostringstream ev;
  ev << clean << "/" << runs << " transfer runs clean; " << lc_ok << "/" << lc_comps
     << " window components locally cyclic";
  res.evidence = ev.str();
  return res;
}

inline CriterionResult crit_determinism(const SuiteOptions& o) {
  CriterionResult res{"12-determinism", false, "", 0.0};
  struct Case {
    GroupHandle g;
    WindowSpec w;
    Variant v;
    bool directed;
    ArtifactFormat f;
  };
  std::vector<Case> cases{
      {GroupHandle::integers(), WindowSpec::integers(quick(o) ? 5 : 10), Variant::Zpm, false,
       ArtifactFormat::Dot},
      {make_group("z6"), WindowSpec::full(), Variant::Z, false, ArtifactFormat::Json},
      {GroupHandle::heisenberg(), WindowSpec::heisenberg(2), Variant::Zpm, true, ArtifactFormat::Dot}};
  bool ok = true;
  for (const Case& c : cases) {
    std::string one = render_graph_artifact(c.g, c.w, c.v, c.directed, c.f, o.cap);
    std::string two = render_graph_artifact(c.g, c.w, c.v, c.directed, c.f, o.cap);
    ok &= one == two && !one.empty();
  }
  res.pass = ok;
  res.evidence = std::to_string(cases.size()) + " build configs rendered twice, byte-compared";
  return res;
}

}  // namespace suite_detail

inline std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  using Fn = CriterionResult (*)(const SuiteOptions&);
  std::vector<Fn> criteria{suite_detail::crit_torsion_coincidence,
                           suite_detail::crit_isolated_vertex,
                           suite_detail::crit_z_twin_signature,
                           suite_detail::crit_boxtimes,
                           suite_detail::crit_doubling,
                           suite_detail::crit_tau_lift,
                           suite_detail::crit_orientation,
                           suite_detail::crit_oracle_agreement,
                           suite_detail::crit_phi_a,
                           suite_detail::crit_q_detection,
                           suite_detail::crit_directed_transfer,
                           suite_detail::crit_determinism};
  std::vector<CriterionResult> results(criteria.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= criteria.size()) break;
      auto t0 = std::chrono::steady_clock::now();
      try {
        results[i] = criteria[i](options);
      } catch (const std::exception& e) {
        results[i].pass = false;
        results[i].evidence = std::string("exception: ") + e.what();
      }
      results[i].millis =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  int jobs = options.jobs > 0 ? options.jobs : 1;
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // Names carry their order; keep them sorted regardless of completion.
  const char* names[] = {"01-torsion-coincidence", "02-isolated-vertex",  "03-z-twin-signature",
                         "04-boxtimes-decomposition", "05-component-doubling", "06-tau-lift",
                         "07-orientation-recovery", "08-oracle-agreement", "09-phi-a",
                         "10-q-detection", "11-directed-transfer", "12-determinism"};
  for (std::size_t i = 0; i < results.size(); ++i)
    if (results[i].name.empty()) results[i].name = names[i];
  return results;
}

}  // namespace powergraph
