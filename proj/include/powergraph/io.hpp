#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "powergraph/errors.hpp"
#include "powergraph/graphs.hpp"
#include "powergraph/groups.hpp"
#include "powergraph/power_graph.hpp"

namespace powergraph {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// DOT renderings list vertices in carrier order and edges with the smaller
// endpoint first, so equal inputs give byte-equal output.
inline std::string to_dot(const SimpleGraph& g, const std::string& name = "powergraph") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < (int)g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << detail::dot_escape(g.label(v)) << "\"];\n";
  for (const auto& [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Digraph& g, const std::string& name = "powergraph") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < (int)g.vertex_count(); ++v)
    os << "  v" << v << " [label=\"" << detail::dot_escape(g.label(v)) << "\"];\n";
  for (const auto& [u, v] : g.arcs()) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json to_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["directed"] = false;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < (int)g.vertex_count(); ++v) j["vertices"].push_back(g.label(v));
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

inline nlohmann::json to_json(const Digraph& g) {
  nlohmann::json j;
  j["directed"] = true;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < (int)g.vertex_count(); ++v) j["vertices"].push_back(g.label(v));
  j["arcs"] = nlohmann::json::array();
  for (const auto& [u, v] : g.arcs()) j["arcs"].push_back({u, v});
  return j;
}

// Height strings look like "default=1,2=inf,3=0": one default entry and one
// entry per exceptional prime, heights either nonnegative integers or inf.
inline HeightFunction parse_heights(const std::string& spec) {
  std::optional<HeightFunction::Height> def;
  std::map<std::int64_t, HeightFunction::Height> exceptions;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("height entry '" + item + "' lacks '='");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    HeightFunction::Height h;
    if (val == "inf") {
      h = std::nullopt;
    } else {
      try {
        std::size_t used = 0;
        int parsed = std::stoi(val, &used);
        if (used != val.size() || parsed < 0) throw std::invalid_argument(val);
        h = parsed;
      } catch (const std::exception&) {
        throw ConfigError("height value '" + val + "' is neither a nonnegative integer nor 'inf'");
      }
    }
    if (key == "default") {
      if (def) throw ConfigError("duplicate default height");
      def = h;
    } else {
      std::int64_t p = 0;
      try {
        std::size_t used = 0;
        p = std::stoll(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ConfigError("height key '" + key + "' is neither 'default' nor a prime");
      }
      if (!is_prime(p)) throw ConfigError("height key '" + key + "' is not prime");
      if (exceptions.count(p)) throw ConfigError("duplicate height for prime " + key);
      exceptions[p] = h;
    }
  }
  if (!def) throw ConfigError("height spec needs a 'default=' entry");
  return HeightFunction(*def, exceptions);
}

// Cayley tables arrive as JSON: either a bare square array of 0-based
// indices or an object {"name": ..., "table": [...]}.
inline GroupHandle parse_cayley_json(const nlohmann::json& j) {
  const nlohmann::json* tbl = &j;
  std::string name;
  if (j.is_object()) {
    if (!j.contains("table")) throw ConfigError("group object lacks a 'table' key");
    tbl = &j.at("table");
    if (j.contains("name")) name = j.at("name").get<std::string>();
  }
  if (!tbl->is_array()) throw ConfigError("'table' must be a square array of arrays");
  std::vector<std::vector<int>> table;
  for (const auto& row : *tbl) {
    if (!row.is_array()) throw ConfigError("'table' must be a square array of arrays");
    std::vector<int> r;
    for (const auto& cell : row) {
      if (!cell.is_number_integer()) throw ConfigError("table entries must be integers");
      r.push_back(cell.get<int>());
    }
    table.push_back(std::move(r));
  }
  try {
    GroupHandle g = GroupHandle::finite_cayley(std::move(table));
    if (!name.empty()) g.set_name(name);
    return g;
  } catch (const NotAGroup& e) {
    throw ConfigError(std::string("table rejected: ") + e.what());
  }
}

// One report line per check: {check, group, window, variant, pass, evidence}.
inline std::string report_line(const std::string& check, const std::string& group,
                               const std::string& window, const std::string& variant, bool pass,
                               const std::string& evidence) {
  nlohmann::json j;
  j["check"] = check;
  j["group"] = group;
  j["window"] = window;
  j["variant"] = variant;
  j["pass"] = pass;
  j["evidence"] = evidence;
  return j.dump();
}

}  // namespace powergraph
