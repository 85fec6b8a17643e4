#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "powergraph/catalog.hpp"
#include "powergraph/power_graph.hpp"

using namespace powergraph;

namespace {

// Brute-force adjacency oracle for a finite cyclic group written additively:
// x ~ y iff y is a multiple of gcd(x,n) or x is a multiple of gcd(y,n).
bool z_n_adjacent(int n, int x, int y) {
  if (x == y) return false;
  auto in_cyclic = [&](int gen, int target) {
    return target % std::gcd(gen == 0 ? n : gen, n) == 0;
  };
  return in_cyclic(x, y) || in_cyclic(y, x);
}

}  // namespace

TEST_CASE("variant plumbing", "[powergraph]") {
  CHECK(variant_name(Variant::Z) == "z");
  CHECK(variant_name(Variant::Nplus) == "nplus");
  CHECK(variant_name(Variant::Zpm) == "zpm");
  CHECK(variant_from_name("z") == Variant::Z);
  CHECK(variant_from_name("nplus") == Variant::Nplus);
  CHECK(variant_from_name("zpm") == Variant::Zpm);
  CHECK_THROWS_AS(variant_from_name("n"), ConfigError);

  CHECK(variant_admits(ExponentSet::single(0), Variant::Z));
  CHECK_FALSE(variant_admits(ExponentSet::single(0), Variant::Zpm));
  CHECK_FALSE(variant_admits(ExponentSet::single(0), Variant::Nplus));
  CHECK(variant_admits(ExponentSet::single(-2), Variant::Zpm));
  CHECK_FALSE(variant_admits(ExponentSet::single(-2), Variant::Nplus));
  CHECK(variant_admits(ExponentSet::residue(2, 4), Variant::Nplus));
  CHECK_FALSE(variant_admits(ExponentSet::empty_set(), Variant::Z));
}

TEST_CASE("z6 power graph matches the cyclic-group oracle", "[powergraph]") {
  auto g = cyclic_group(6);
  auto b = build_power_graph(g, WindowSpec::full(), Variant::Z);
  REQUIRE(b.graph.vertex_count() == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      CHECK(b.graph.adjacent(i, j) == z_n_adjacent(6, i, j));
    }
  // All three variants coincide on a torsion group.
  auto bp = build_power_graph(g, WindowSpec::full(), Variant::Nplus);
  auto bpm = build_power_graph(g, WindowSpec::full(), Variant::Zpm);
  CHECK(b.graph == bp.graph);
  CHECK(b.graph == bpm.graph);
  CHECK(b.digraph == bp.digraph);
  CHECK(b.digraph == bpm.digraph);
  // z6 is not complete: 2 and 3 generate incomparable subgroups.
  CHECK_FALSE(b.graph.adjacent(2, 3));
}

TEST_CASE("integer window adjacency is divisibility", "[powergraph]") {
  auto g = GroupHandle::integers();
  auto b = build_power_graph(g, WindowSpec::integers(6), Variant::Zpm);
  REQUIRE(b.carrier.size() == 13);

  for (std::size_t i = 0; i < b.carrier.size(); ++i)
    for (std::size_t j = 0; j < b.carrier.size(); ++j) {
      if (i == j) continue;
      std::int64_t x = std::get<std::int64_t>(b.carrier[i]);
      std::int64_t y = std::get<std::int64_t>(b.carrier[j]);
      bool expect = x != 0 && y != 0 && (y % x == 0 || x % y == 0);
      CHECK(b.graph.adjacent((int)i, (int)j) == expect);
    }

  // 0 is isolated here but universal in the all-integers variant.
  CHECK(b.graph.degree(b.identity_index) == 0);
  auto bz = build_power_graph(g, WindowSpec::integers(6), Variant::Z);
  CHECK(bz.graph.degree(bz.identity_index) == 12);

  // The positive-exponents variant loses sign-flip edges: {2,-2} and {-2,4}.
  auto bn = build_power_graph(g, WindowSpec::integers(6), Variant::Nplus);
  int v2 = bn.index_of(Element((std::int64_t)2));
  int vm2 = bn.index_of(Element((std::int64_t)-2));
  int v4 = bn.index_of(Element((std::int64_t)4));
  CHECK_FALSE(bn.graph.adjacent(v2, vm2));
  CHECK_FALSE(bn.graph.adjacent(vm2, v4));
  CHECK(bn.graph.adjacent(v2, v4));
  CHECK(b.graph.adjacent(v2, vm2));
  CHECK(b.graph.adjacent(vm2, v4));

  // Arcs carry the direction of the power relation.
  CHECK(b.digraph.has_arc(v2, v4));
  CHECK_FALSE(b.digraph.has_arc(v4, v2));
}

TEST_CASE("heisenberg window separates powers from mere commuting", "[powergraph]") {
  auto g = GroupHandle::heisenberg();
  auto b = build_power_graph(g, WindowSpec::heisenberg(2), Variant::Zpm);

  int x = b.index_of(Element(HTriple{1, 0, 0}));
  int x2 = b.index_of(Element(HTriple{2, 0, 0}));
  int z = b.index_of(Element(HTriple{0, 0, 1}));

  CHECK(b.digraph.has_arc(x, x2));
  CHECK_FALSE(b.digraph.has_arc(x2, x));
  // (0,0,1) is central, so it commutes with (1,0,0), yet neither is a
  // power of the other.
  CHECK_FALSE(b.graph.adjacent(x, z));
  // Identity is isolated in the nonzero-exponents variant.
  CHECK(b.graph.degree(b.identity_index) == 0);
  // Central column: (0,0,1) -> (0,0,2).
  CHECK(b.digraph.has_arc(z, b.index_of(Element(HTriple{0, 0, 2}))));
}

TEST_CASE("rational window adjacency via integer ratios", "[powergraph]") {
  auto g = GroupHandle::rational_subgroup(HeightFunction::inverted_prime(2));
  auto b = build_power_graph(g, WindowSpec::rationals(2, 4), Variant::Zpm);

  int half = b.index_of(Element(Rational(1, 2)));
  int quarter = b.index_of(Element(Rational(1, 4)));
  int one = b.index_of(Element(Rational(1)));
  CHECK(b.digraph.has_arc(quarter, half));   // 1/2 = 2 * (1/4)
  CHECK(b.digraph.has_arc(quarter, one));    // 1 = 4 * (1/4)
  CHECK(b.digraph.has_arc(half, one));
  CHECK_FALSE(b.digraph.has_arc(half, quarter));
  CHECK(b.graph.degree(b.identity_index) == 0);
}

TEST_CASE("center of the all-integers power graph", "[powergraph]") {
  SECTION("prime power order: complete graph") {
    auto b = build_power_graph(cyclic_group(8), WindowSpec::full(), Variant::Z);
    CHECK(center_of_power_graph(b).size() == 8);
  }
  SECTION("z6: identity and generators") {
    auto b = build_power_graph(cyclic_group(6), WindowSpec::full(), Variant::Z);
    CHECK(center_of_power_graph(b) == std::vector<int>{0, 1, 5});
  }
  SECTION("q8: identity and -1") {
    auto b = build_power_graph(quaternion_group_8(), WindowSpec::full(), Variant::Z);
    CHECK(center_of_power_graph(b) == std::vector<int>{0, 1});
  }
  SECTION("wrong variant rejected") {
    auto b = build_power_graph(cyclic_group(6), WindowSpec::full(), Variant::Zpm);
    CHECK_THROWS_AS(center_of_power_graph(b), PreconditionFailed);
  }
}

TEST_CASE("same cyclic subgroup", "[powergraph]") {
  auto z = GroupHandle::integers();
  CHECK(same_cyclic_subgroup(z, (std::int64_t)2, (std::int64_t)-2));
  CHECK_FALSE(same_cyclic_subgroup(z, (std::int64_t)2, (std::int64_t)4));
  auto q8 = quaternion_group_8();
  CHECK(same_cyclic_subgroup(q8, CayleyElem{2}, CayleyElem{3}));   // i and -i
  CHECK_FALSE(same_cyclic_subgroup(q8, CayleyElem{2}, CayleyElem{4}));  // i and j
}

TEST_CASE("symbolic twin classes", "[powergraph]") {
  SECTION("integers, all-integers variant") {
    auto g = GroupHandle::integers();
    auto e = Element((std::int64_t)0);
    CHECK(symbolic_twins(g, (std::int64_t)1, (std::int64_t)-1, Variant::Z));
    CHECK(symbolic_twins(g, e, (std::int64_t)1, Variant::Z));
    CHECK(symbolic_twins(g, e, (std::int64_t)-1, Variant::Z));
    CHECK(symbolic_twins(g, (std::int64_t)2, (std::int64_t)-2, Variant::Z));
    CHECK_FALSE(symbolic_twins(g, e, (std::int64_t)2, Variant::Z));
    CHECK_FALSE(symbolic_twins(g, (std::int64_t)2, (std::int64_t)3, Variant::Z));
    CHECK_FALSE(symbolic_twins(g, (std::int64_t)2, (std::int64_t)4, Variant::Z));
  }
  SECTION("nonzero variant strips the identity merge") {
    auto g = GroupHandle::integers();
    CHECK(symbolic_twins(g, (std::int64_t)1, (std::int64_t)-1, Variant::Zpm));
    CHECK_FALSE(symbolic_twins(g, (std::int64_t)0, (std::int64_t)1, Variant::Zpm));
  }
  SECTION("positive variant unsupported") {
    auto g = GroupHandle::integers();
    CHECK_THROWS_AS(symbolic_twins(g, (std::int64_t)1, (std::int64_t)2, Variant::Nplus),
                    UnsupportedFamily);
  }
  SECTION("cyclic rational subgroup merges its generator with the identity") {
    auto g = GroupHandle::rational_subgroup(HeightFunction(0, {{2, 2}, {3, 1}}));
    Element e = Element(Rational(0));
    CHECK(symbolic_twins(g, e, Rational(1, 12), Variant::Z));
    CHECK(symbolic_twins(g, e, Rational(-1, 12), Variant::Z));
    CHECK_FALSE(symbolic_twins(g, e, Rational(1, 6), Variant::Z));
  }
  SECTION("non-cyclic rational subgroup keeps the identity alone") {
    auto g = GroupHandle::rational_subgroup(HeightFunction::inverted_prime(2));
    CHECK_FALSE(symbolic_twins(g, Rational(0), Rational(1), Variant::Z));
    CHECK(symbolic_twins(g, Rational(1, 2), Rational(-1, 2), Variant::Z));
  }
  SECTION("heisenberg identity stays alone in both variants") {
    auto g = GroupHandle::heisenberg();
    Element e = HTriple{0, 0, 0};
    CHECK_FALSE(symbolic_twins(g, e, HTriple{1, 0, 0}, Variant::Z));
    CHECK(symbolic_twins(g, HTriple{1, 2, 0}, HTriple{-1, -2, 2}, Variant::Z));
  }
  SECTION("finite groups scan the carrier") {
    auto q8 = quaternion_group_8();
    CHECK(symbolic_twins(q8, CayleyElem{2}, CayleyElem{3}, Variant::Z));  // i, -i
    CHECK_FALSE(symbolic_twins(q8, CayleyElem{2}, CayleyElem{4}, Variant::Z));
    auto z6 = cyclic_group(6);
    CHECK(symbolic_twins(z6, CayleyElem{0}, CayleyElem{1}, Variant::Z));
    CHECK(symbolic_twins(z6, CayleyElem{2}, CayleyElem{4}, Variant::Z));
    CHECK_FALSE(symbolic_twins(z6, CayleyElem{2}, CayleyElem{3}, Variant::Z));
  }
}

TEST_CASE("twin-class profile of integer windows", "[powergraph]") {
  auto g = GroupHandle::integers();
  auto b = build_power_graph(g, WindowSpec::integers(8), Variant::Z);
  auto prof = equiv_class_profile(b);

  // {0,1,-1} plus pairs {k,-k} for k=2..8.
  std::vector<std::size_t> expect{2, 2, 2, 2, 2, 2, 2, 3};
  CHECK(prof.block_sizes == expect);
  CHECK(prof.z_signature);
  CHECK(prof.window_matches_symbolic);
  // Inside [-8, 8] the vertices 4 and 8 have equal closed neighborhoods (the
  // separating multiple 12 is outside), so exactly one graph-twin block
  // needed the symbolic split.
  CHECK(prof.boundary_splits == 1);

  // Identify the triple block explicitly.
  bool found_triple = false;
  for (const auto& bl : prof.window_partition.blocks) {
    if (bl.size() != 3) continue;
    found_triple = true;
    std::set<std::string> labels;
    for (int v : bl) labels.insert(b.graph.label(v));
    CHECK(labels == std::set<std::string>{"-1", "0", "1"});
  }
  CHECK(found_triple);
}

TEST_CASE("twin-class profile flags non-integer groups", "[powergraph]") {
  SECTION("z6 fails the signature") {
    auto b = build_power_graph(cyclic_group(6), WindowSpec::full(), Variant::Z);
    auto prof = equiv_class_profile(b);
    CHECK(prof.block_sizes == std::vector<std::size_t>{1, 2, 3});
    CHECK_FALSE(prof.z_signature);
    CHECK(prof.window_matches_symbolic);
    CHECK(prof.boundary_splits == 0);  // full carrier, nothing hidden
  }
  SECTION("cyclic rational subgroup passes: it is abstractly the integers") {
    auto g = GroupHandle::rational_subgroup(HeightFunction(0, {{2, 1}}));
    auto b = build_power_graph(g, WindowSpec::rationals(2, 2), Variant::Z);
    auto prof = equiv_class_profile(b);
    CHECK(prof.z_signature);
    CHECK(prof.window_matches_symbolic);
    // The carrier {0, +-1/2, +-1, +-2} induces a complete graph (the window
    // hides 3/2 and 3, the elements that would separate the ladder), so the
    // single graph-twin block gets split into the three symbolic classes.
    CHECK(prof.boundary_splits == 1);
    CHECK(prof.block_sizes == std::vector<std::size_t>{2, 2, 3});
  }
  SECTION("non-cyclic rational subgroup fails") {
    auto g = GroupHandle::rational_subgroup(HeightFunction::inverted_prime(2));
    auto b = build_power_graph(g, WindowSpec::rationals(2, 4), Variant::Z);
    CHECK_FALSE(equiv_class_profile(b).z_signature);
  }
  SECTION("wrong variant rejected") {
    auto b = build_power_graph(GroupHandle::integers(), WindowSpec::integers(3), Variant::Zpm);
    CHECK_THROWS_AS(equiv_class_profile(b), PreconditionFailed);
  }
}

TEST_CASE("bundle bookkeeping and guards", "[powergraph]") {
  auto g = GroupHandle::integers();
  auto b = build_power_graph(g, WindowSpec::integers(3), Variant::Zpm);
  CHECK(b.carrier.size() == 7);
  CHECK(b.element(0) == g.identity());
  CHECK(b.carries(Element((std::int64_t)-3)));
  CHECK_FALSE(b.carries(Element((std::int64_t)4)));
  CHECK(b.index_of(Element((std::int64_t)2)) == 3);
  CHECK(b.graph.label(3) == "2");
  CHECK_THROWS_AS(b.index_of(Element((std::int64_t)9)), UnknownVertex);
  CHECK_THROWS_AS(b.element(99), UnknownVertex);

  SECTION("cap enforcement") {
    CHECK_THROWS_AS(build_power_graph(g, WindowSpec::integers(10), Variant::Z, 19),
                    WindowTooLarge);
    CHECK_NOTHROW(build_power_graph(g, WindowSpec::integers(9), Variant::Z, 19));
  }
  SECTION("carrier elements must lie in the group") {
    auto q = GroupHandle::rational_subgroup(HeightFunction::inverted_prime(2));
    std::vector<Element> carrier{Element(Rational(0)), Element(Rational(1, 5))};
    CHECK_THROWS_AS(build_power_graph_from_carrier(q, carrier, Variant::Z),
                    ElementNotInGroup);
  }
}
