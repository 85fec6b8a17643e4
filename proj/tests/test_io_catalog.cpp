#include <catch2/catch_amalgamated.hpp>

#include <string>

#include <json.hpp>

#include "powergraph/catalog.hpp"
#include "powergraph/io.hpp"
#include "powergraph/power_graph.hpp"

using namespace powergraph;
using nlohmann::json;

TEST_CASE("height strings parse and print canonically", "[io]") {
  SECTION("round trips") {
    for (const char* spec : {"default=0", "default=inf", "default=1", "default=0,2=inf",
                             "default=0,2=inf,7=3", "default=inf,2=0"}) {
      HeightFunction h = parse_heights(spec);
      CHECK(h.str() == spec);
      CHECK(parse_heights(h.str()).str() == h.str());
    }
  }
  SECTION("entry order does not matter") {
    CHECK(parse_heights("2=inf,default=0").str() == "default=0,2=inf");
    CHECK(parse_heights("7=3,2=inf,default=0").str() == "default=0,2=inf,7=3");
  }
  SECTION("empty entries are skipped") {
    CHECK(parse_heights("default=0,,2=1").str() == "default=0,2=1");
  }
  SECTION("rejects") {
    CHECK_THROWS_AS(parse_heights(""), ConfigError);
    CHECK_THROWS_AS(parse_heights("2=inf"), ConfigError);            // no default
    CHECK_THROWS_AS(parse_heights("default=0,default=1"), ConfigError);
    CHECK_THROWS_AS(parse_heights("default=x"), ConfigError);
    CHECK_THROWS_AS(parse_heights("default=-1"), ConfigError);
    CHECK_THROWS_AS(parse_heights("default=0,4=1"), ConfigError);    // 4 is not prime
    CHECK_THROWS_AS(parse_heights("default=0,2=1,2=2"), ConfigError);
    CHECK_THROWS_AS(parse_heights("default=0,2"), ConfigError);      // no '='
    CHECK_THROWS_AS(parse_heights("default=0,p=1"), ConfigError);
    CHECK_THROWS_AS(parse_heights("default=0,2=1x"), ConfigError);
  }
}

TEST_CASE("dot rendering", "[io]") {
  SECTION("undirected, fixed order") {
    SimpleGraph g({"a", "b", "c"});
    g.add_edge(1, 2);
    g.add_edge(0, 1);
    CHECK(to_dot(g, "demo") ==
          "graph demo {\n"
          "  v0 [label=\"a\"];\n"
          "  v1 [label=\"b\"];\n"
          "  v2 [label=\"c\"];\n"
          "  v0 -- v1;\n"
          "  v1 -- v2;\n"
          "}\n");
  }
  SECTION("directed") {
    Digraph g({"x", "y"});
    g.add_arc(0, 1);
    CHECK(to_dot(g) ==
          "digraph powergraph {\n"
          "  v0 [label=\"x\"];\n"
          "  v1 [label=\"y\"];\n"
          "  v0 -> v1;\n"
          "}\n");
  }
  SECTION("labels with quotes and backslashes are escaped") {
    SimpleGraph g({"say \"hi\"", "back\\slash"});
    std::string dot = to_dot(g);
    CHECK(dot.find("label=\"say \\\"hi\\\"\"") != std::string::npos);
    CHECK(dot.find("label=\"back\\\\slash\"") != std::string::npos);
  }
  SECTION("equal builds render byte-equal") {
    auto b1 = build_power_graph(make_group("z6"), WindowSpec::full(), Variant::Z);
    auto b2 = build_power_graph(make_group("z6"), WindowSpec::full(), Variant::Z);
    CHECK(to_dot(b1.graph) == to_dot(b2.graph));
    CHECK(to_dot(b1.digraph) == to_dot(b2.digraph));
  }
}

TEST_CASE("json rendering", "[io]") {
  SimpleGraph g({"0", "1", "2"});
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  json j = to_json(g);
  CHECK(j["directed"] == false);
  CHECK(j["vertices"] == json::array({"0", "1", "2"}));
  CHECK(j["edges"] == json::array({{0, 1}, {0, 2}}));

  Digraph d({"u", "v"});
  d.add_arc(1, 0);
  json jd = to_json(d);
  CHECK(jd["directed"] == true);
  CHECK(jd["arcs"] == json::array({{1, 0}}));
}

TEST_CASE("cayley tables from json", "[io]") {
  SECTION("bare array") {
    json j = json::parse("[[0,1,2],[1,2,0],[2,0,1]]");
    GroupHandle g = parse_cayley_json(j);
    CHECK(g.cayley_order() == 3);
    CHECK(g.name() == "finite_cayley_3");
  }
  SECTION("named object") {
    json j;
    j["name"] = "z3";
    j["table"] = json::parse("[[0,1,2],[1,2,0],[2,0,1]]");
    GroupHandle g = parse_cayley_json(j);
    CHECK(g.name() == "z3");
    CHECK(g.cayley_order() == 3);
  }
  SECTION("rejects") {
    CHECK_THROWS_AS(parse_cayley_json(json::parse("{\"name\":\"x\"}")), ConfigError);
    CHECK_THROWS_AS(parse_cayley_json(json::parse("{\"table\": 5}")), ConfigError);
    CHECK_THROWS_AS(parse_cayley_json(json::parse("[[0,1],[1,0],[0,1]]")), ConfigError);
    CHECK_THROWS_AS(parse_cayley_json(json::parse("[[0,1],[0,1]]")), ConfigError);
    CHECK_THROWS_AS(parse_cayley_json(json::parse("[[\"a\"]]")), ConfigError);
    // Latin square without associativity is still rejected, through the same door.
    json bad = json::parse(
        "[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]");
    CHECK_THROWS_AS(parse_cayley_json(bad), ConfigError);
  }
}

TEST_CASE("group presets", "[catalog]") {
  SECTION("finite presets") {
    CHECK(make_group("z1").cayley_order() == 1);
    CHECK(make_group("z6").cayley_order() == 6);
    CHECK(make_group("z6").name() == "z6");
    CHECK(make_group("s3").cayley_order() == 6);
    CHECK(make_group("q8").cayley_order() == 8);
  }
  SECTION("infinite presets") {
    CHECK(make_group("integers").family() == Family::IntegersZ);
    CHECK(make_group("heisenberg").family() == Family::HeisenbergZ);
    CHECK(make_group("rationals").heights().str() == "default=inf");
    CHECK(make_group("z-inv-2").heights().str() == "default=0,2=inf");
    CHECK(make_group("z-inv-3").heights().str() == "default=0,3=inf");
    CHECK(make_group("height-one").heights().str() == "default=1");
  }
  SECTION("rejects") {
    for (const char* name : {"", "foo", "z0", "z-1", "zx", "z600", "z-inv-4", "z-inv-x"})
      CHECK_THROWS_AS(make_group(name), ConfigError);
  }
}

TEST_CASE("family-specific default windows", "[catalog]") {
  CHECK(default_window(make_group("z6"), 12).str() == "0");
  CHECK(default_window(make_group("integers"), 12).str() == "12");
  CHECK(default_window(make_group("rationals"), 3).str() == "3/3");
  CHECK(default_window(make_group("heisenberg"), 2).str() == "2");
}

TEST_CASE("report lines are json objects", "[io]") {
  std::string line = report_line("boxtimes", "integers", "12", "zpm", true, "3 components checked");
  json j = json::parse(line);
  CHECK(j["check"] == "boxtimes");
  CHECK(j["group"] == "integers");
  CHECK(j["window"] == "12");
  CHECK(j["variant"] == "zpm");
  CHECK(j["pass"] == true);
  CHECK(j["evidence"] == "3 components checked");
  CHECK(line.find('\n') == std::string::npos);
}
