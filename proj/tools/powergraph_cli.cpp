// Command line front end: build/export power graphs, run single checks,
// or run the whole verification suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powergraph/catalog.hpp"
#include "powergraph/direction.hpp"
#include "powergraph/io.hpp"
#include "powergraph/suite.hpp"
#include "powergraph/transforms.hpp"

namespace {

using namespace powergraph;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;
constexpr int kExitCheck = 4;

struct GroupArgs {
  std::string group;
  std::string table_file;
  std::string heights;
  std::optional<std::int64_t> window;
};

void add_group_flags(CLI::App* cmd, GroupArgs& args) {
  cmd->add_option("--group", args.group, "named preset (z<n>, s3, q8, integers, rationals, z-inv-<p>, height-one, heisenberg)");
  cmd->add_option("--table", args.table_file, "JSON file with a Cayley table");
  cmd->add_option("--heights", args.heights, "height spec for a rational subgroup, e.g. default=0,2=inf");
  cmd->add_option("--window", args.window, "window size (|n| bound for integers, num/den bound for rationals, coordinate bound for heisenberg)");
}

GroupHandle resolve_group(const GroupArgs& args) {
  int sources = (!args.group.empty()) + (!args.table_file.empty()) + (!args.heights.empty());
  if (sources == 0) throw ConfigError("pick a group via --group, --table, or --heights");
  if (sources > 1) throw ConfigError("--group, --table, and --heights are mutually exclusive");
  if (!args.group.empty()) return make_group(args.group);
  if (!args.heights.empty()) {
    GroupHandle g = GroupHandle::rational_subgroup(parse_heights(args.heights));
    g.set_name("heights(" + args.heights + ")");
    return g;
  }
  std::ifstream in(args.table_file);
  if (!in) throw ConfigError("cannot open table file " + args.table_file);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("table file is not JSON: ") + e.what());
  }
  return parse_cayley_json(j);
}

WindowSpec resolve_window(const GroupHandle& g, const GroupArgs& args) {
  std::int64_t n = args.window.value_or(0);
  if (!args.window) {
    switch (g.family()) {
      case Family::FiniteCayley: return WindowSpec::full();
      case Family::IntegersZ: n = 10; break;
      case Family::RationalSubgroup: n = 4; break;
      case Family::HeisenbergZ: n = 2; break;
    }
  }
  if (g.family() != Family::FiniteCayley && n < 1)
    throw ConfigError("--window must be at least 1 for infinite families");
  return default_window(g, n);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + output);
  out << text;
}

int cmd_build(const GroupArgs& gargs, const std::string& variant, bool directed,
              const std::string& format, const std::string& output) {
  GroupHandle g = resolve_group(gargs);
  WindowSpec w = resolve_window(g, gargs);
  Variant v = variant_from_name(variant);
  if (format == "dot") {
    emit(render_graph_artifact(g, w, v, directed, ArtifactFormat::Dot), output);
  } else if (format == "json") {
    emit(render_graph_artifact(g, w, v, directed, ArtifactFormat::Json), output);
  } else if (format == "report") {
    PowerGraphBundle b = build_power_graph(g, w, v, default_resource_cap());
    std::ostringstream ev;
    ev << b.graph.vertex_count() << " vertices, " << b.graph.edge_count() << " edges, "
       << b.digraph.arc_count() << " arcs";
    emit(report_line("build", g.name(), w.str(), variant_name(v), true, ev.str()) + "\n", output);
  } else {
    throw ConfigError("unknown format '" + format + "'");
  }
  return kExitOk;
}

// One named check, one JSON-lines report on stdout, exit 0 iff it passes.
int cmd_check(const std::string& name, const GroupArgs& gargs, const std::string& variant,
              std::uint64_t seed) {
  GroupHandle g = resolve_group(gargs);
  WindowSpec w = resolve_window(g, gargs);
  bool pass = false;
  std::string evidence;

  if (name == "boxtimes") {
    PowerGraphBundle b = build_power_graph(g, w, Variant::Zpm, default_resource_cap());
    std::ostringstream ev;
    pass = true;
    std::size_t tested = 0;
    for (const auto& comp : connected_components(b.graph)) {
      if (comp.size() < 2) continue;
      bool torsion = false;
      for (int v : comp)
        if (b.group.element_order(b.element(v))) torsion = true;
      if (torsion) continue;
      ++tested;
      ComponentSplit split = split_component(b, comp);
      BoxtimesReport rep = verify_boxtimes_decomposition(b, split);
      pass &= rep.all();
      ev << (rep.psi1_iso_psi2 ? "T" : "F") << (rep.phi_iso_psi1_boxtimes_p2 ? "T" : "F")
         << (rep.psi1_iso_twin_quotient ? "T" : "F") << " ";
    }
    pass &= tested > 0;
    evidence = std::to_string(tested) + " components: " + ev.str();
  } else if (name == "doubling") {
    PowerGraphBundle plus = build_power_graph(g, w, Variant::Nplus, default_resource_cap());
    PowerGraphBundle pm = build_power_graph(g, w, Variant::Zpm, default_resource_cap());
    DoublingReport rep = verify_component_doubling(plus, pm);
    pass = rep.holds;
    evidence = std::to_string(rep.plus_infinite_components) + " positive-domain components vs " +
               std::to_string(rep.pm_infinite_components) + " merged classes" +
               (rep.evidence.empty() ? "" : "; " + rep.evidence);
  } else if (name == "twins") {
    PowerGraphBundle b = build_power_graph(g, w, Variant::Z, default_resource_cap());
    EquivClassProfile prof = equiv_class_profile(b);
    pass = prof.window_matches_symbolic &&
           (g.family() == Family::IntegersZ ? prof.z_signature : true);
    std::ostringstream ev;
    ev << "block sizes ";
    for (std::size_t s : prof.block_sizes) ev << s << " ";
    if (prof.boundary_splits > 0) ev << "(" << prof.boundary_splits << " boundary merges split) ";
    ev << (prof.z_signature ? "(integer signature)" : "");
    evidence = ev.str();
  } else if (name == "isolated") {
    PowerGraphBundle b = build_power_graph(g, w, Variant::Zpm, default_resource_cap());
    std::vector<int> isolated;
    for (int v = 0; v < (int)b.graph.vertex_count(); ++v)
      if (b.graph.degree(v) == 0) isolated.push_back(v);
    if (g.torsion_free())
      pass = isolated.size() == 1 && isolated.front() == b.identity_index;
    else
      pass = isolated.empty();
    evidence = std::to_string(isolated.size()) + " isolated vertices";
  } else if (name == "orientation") {
    PowerGraphBundle b = build_power_graph(g, w, Variant::Zpm, default_resource_cap());
    std::size_t pairs = 0, agree = 0;
    for (const Element& x : b.carrier) {
      if (x == g.identity()) continue;
      for (const Element& y : b.carrier) {
        if (y == g.identity() || y == x || y == g.inverse(x)) continue;
        bool fwd = g.solve_power_of(y, x).has_nonzero();
        bool bwd = g.solve_power_of(x, y).has_nonzero();
        if (!fwd && !bwd) continue;
        ++pairs;
        Orientation got = recover_orientation(g, x, y);
        if ((got == Orientation::XtoY) == fwd) ++agree;
      }
    }
    pass = pairs > 0 && agree == pairs;
    evidence = std::to_string(agree) + "/" + std::to_string(pairs) + " orientations agree with ground truth";
  } else if (name == "oracle") {
    std::size_t pairs = 0, disagree = 0;
    std::vector<Element> carrier = g.window_carrier(w);
    for (const Element& x : carrier) {
      if (x == g.identity()) continue;
      for (const Element& y : carrier) {
        if (y == g.identity() || y == x || y == g.inverse(x)) continue;
        ++pairs;
        bool fin = s_set_is_finite(g, x, y);
        GrowthVerdict v = suite_detail::decisive_growth_verdict(g, x, y, scale_window(w, 2));
        if (v != (fin ? GrowthVerdict::Finite : GrowthVerdict::Infinite)) ++disagree;
      }
    }
    pass = pairs > 0 && disagree == 0;
    evidence = std::to_string(pairs) + " pairs, " + std::to_string(disagree) + " disagreements";
  } else if (name == "phi-a") {
    std::ostringstream ev;
    pass = true;
    for (std::int64_t a = 1; a <= 3; ++a) {
      std::vector<Element> carrier = phi_a_closed_carrier(g, Rational(a), w);
      PowerGraphBundle b = build_power_graph_from_carrier(g, carrier, Variant::Zpm, WindowSpec::full(),
                                                          default_resource_cap());
      PhiAReport rep = verify_phi_a(b, Rational(a));
      pass &= rep.all();
      ev << "a=" << a << (rep.all() ? " ok " : " FAIL ");
    }
    evidence = ev.str();
  } else if (name == "is-q") {
    if (g.family() != Family::RationalSubgroup)
      throw ConfigError("is-q needs a rational subgroup (--heights or a rational preset)");
    RationalClassification cls = classify_rational_subgroup(g.heights());
    bool by_symmetry = is_rationals_by_neighbor_symmetry(g);
    pass = by_symmetry == cls.is_q;
    std::ostringstream ev;
    ev << "{\"is_q\": " << (cls.is_q ? "true" : "false");
    if (cls.witness_prime) ev << ", \"witness_prime\": " << *cls.witness_prime;
    ev << "}";
    evidence = ev.str();
  } else if (name == "transfer") {
    PowerGraphBundle b = build_power_graph(g, w, Variant::Zpm, default_resource_cap());
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> maps;
    std::vector<int> ident((std::size_t)b.graph.vertex_count());
    for (std::size_t v = 0; v < ident.size(); ++v) ident[v] = (int)v;
    maps.push_back(ident);
    std::vector<int> inv(ident);
    for (std::size_t v = 0; v < inv.size(); ++v)
      inv[v] = b.index_of(b.group.inverse(b.element((int)v)));
    maps.push_back(inv);
    for (int i = 0; i < 20; ++i) maps.push_back(suite_detail::random_twin_swap(b.graph, rng));
    std::size_t runs = 0, clean = 0;
    for (const auto& phi : maps)
      for (const auto& comp : suite_detail::nontrivial_components(b.graph)) {
        ++runs;
        TransferReport rep = check_directed_transfer(b, b, phi, comp);
        if (rep.clean() && rep.io_slices_match) ++clean;
      }
    pass = runs > 0 && clean == runs;
    evidence = std::to_string(clean) + "/" + std::to_string(runs) + " runs with a clean verdict";
  } else if (name == "locally-cyclic") {
    if (g.family() != Family::HeisenbergZ)
      throw ConfigError("locally-cyclic runs on the heisenberg preset");
    PowerGraphBundle b = build_power_graph(g, w, Variant::Zpm, default_resource_cap());
    std::size_t comps = 0, good = 0;
    for (const auto& comp : suite_detail::nontrivial_components(b.graph)) {
      ++comps;
      if (locally_cyclic_component_check(b, comp, 2 * w.bound)) ++good;
    }
    pass = comps > 0 && good == comps;
    evidence = std::to_string(good) + "/" + std::to_string(comps) + " components locally cyclic";
  } else {
    throw ConfigError("unknown check '" + name +
                      "' (try boxtimes, doubling, twins, isolated, orientation, oracle, phi-a, is-q, "
                      "transfer, locally-cyclic)");
  }

  std::cout << report_line(name, g.name(), w.str(), variant, pass, evidence) << "\n";
  return pass ? kExitOk : kExitCheck;
}

int cmd_suite(const std::string& profile, int jobs, std::uint64_t seed, const std::string& json_out) {
  SuiteOptions opts;
  if (profile == "quick")
    opts.profile = SuiteProfile::Quick;
  else if (profile == "desk")
    opts.profile = SuiteProfile::Desk;
  else
    throw ConfigError("unknown profile '" + profile + "'");
  opts.jobs = jobs;
  opts.seed = seed;

  std::vector<CriterionResult> results = run_suite(opts);
  bool all = true;
  std::string first_fail;
  double total = 0.0;
  std::ostringstream json;
  for (const CriterionResult& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << (int)r.millis << " ms): "
              << r.evidence << "\n";
    json << report_line(r.name, "suite", profile, "-", r.pass, r.evidence) << "\n";
    if (!r.pass && first_fail.empty()) first_fail = r.name;
    all &= r.pass;
    total += r.millis;
  }
  std::cout << (all ? "all criteria passed" : "first failing criterion: " + first_fail) << " ("
            << (int)total << " ms total)\n";
  if (!json_out.empty()) emit(json.str(), json_out);
  return all ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power graph toolkit"};
  app.require_subcommand(1);

  GroupArgs build_args, check_args;
  std::string build_variant = "zpm", build_format = "dot", build_output;
  bool build_directed = false;
  CLI::App* build = app.add_subcommand("build", "materialize a window graph and export it");
  add_group_flags(build, build_args);
  build->add_option("--variant", build_variant, "exponent domain: z, nplus, or zpm")
      ->check(CLI::IsMember({"z", "nplus", "zpm"}));
  build->add_flag("--directed", build_directed, "export the directed graph");
  build->add_option("--format", build_format, "dot, json, or report")
      ->check(CLI::IsMember({"dot", "json", "report"}));
  build->add_option("--output", build_output, "output file (default stdout)");

  std::string check_name, check_variant = "zpm";
  std::uint64_t check_seed = 12345;
  CLI::App* check = app.add_subcommand("check", "run one named check and emit a JSON report line");
  check->add_option("name", check_name, "check name")->required();
  add_group_flags(check, check_args);
  check->add_option("--variant", check_variant, "exponent domain tag for the report")
      ->check(CLI::IsMember({"z", "nplus", "zpm"}));
  check->add_option("--seed", check_seed, "seed for generated maps");

  std::string suite_profile = "desk", suite_json;
  int suite_jobs = 1;
  std::uint64_t suite_seed = 12345;
  CLI::App* suite = app.add_subcommand("suite", "run the full acceptance suite");
  suite->add_option("--profile", suite_profile, "quick or desk")
      ->check(CLI::IsMember({"quick", "desk"}));
  suite->add_option("--jobs", suite_jobs, "criteria run concurrently up to this limit");
  suite->add_option("--seed", suite_seed, "seed for generated maps");
  suite->add_option("--json", suite_json, "also write a JSON-lines summary to this file");

  try {
    app.parse(argc, argv);
    if (build->parsed())
      return cmd_build(build_args, build_variant, build_directed, build_format, build_output);
    if (check->parsed()) return cmd_check(check_name, check_args, check_variant, check_seed);
    if (suite->parsed()) return cmd_suite(suite_profile, suite_jobs, suite_seed, suite_json);
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  } catch (const WindowTooLarge& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
}
