#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "powergraph/errors.hpp"
#include "powergraph/groups.hpp"

namespace powergraph {

// Cyclic group of order n as addition mod n.
inline GroupHandle cyclic_group(int n) {
  if (n < 1) throw ConfigError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  GroupHandle g = GroupHandle::finite_cayley(std::move(table));
  g.set_name("z" + std::to_string(n));
  return g;
}

// Symmetric group on three points; elements are the permutations of
// {0,1,2} in lexicographic one-line order, composed left-into-right:
// (p * q)(i) = p(q(i)).
inline GroupHandle symmetric_group_3() {
  const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2},
                                                 {0, 2, 1},
                                                 {1, 0, 2},
                                                 {1, 2, 0},
                                                 {2, 0, 1},
                                                 {2, 1, 0}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw ConfigError("permutation composition left the table");
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      table[i][j] = index_of(comp);
    }
  GroupHandle g = GroupHandle::finite_cayley(std::move(table));
  g.set_name("s3");
  return g;
}

// Quaternion group {1, -1, i, -i, j, -j, k, -k} in that vertex order.
inline GroupHandle quaternion_group_8() {
  // Axis products: result axis and sign for axes 1, i, j, k.
  const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      int au = u / 2, su = u % 2 == 0 ? +1 : -1;
      int av = v / 2, sv = v % 2 == 0 ? +1 : -1;
      int a = axis[au][av];
      int s = sign[au][av] * su * sv;
      table[u][v] = a * 2 + (s > 0 ? 0 : 1);
    }
  GroupHandle g = GroupHandle::finite_cayley(std::move(table));
  g.set_name("q8");
  return g;
}

// Named presets: z<n>, s3, q8, integers, rationals, z-inv-<p>, height-one,
// heisenberg.
inline GroupHandle make_group(const std::string& name) {
  if (name == "s3") return symmetric_group_3();
  if (name == "q8") return quaternion_group_8();
  if (name == "integers") return GroupHandle::integers();
  if (name == "rationals") {
    GroupHandle g = GroupHandle::rational_subgroup(HeightFunction::all_of_q());
    g.set_name("rationals");
    return g;
  }
  if (name == "height-one") {
    GroupHandle g = GroupHandle::rational_subgroup(HeightFunction(1, {}));
    g.set_name("height-one");
    return g;
  }
  if (name == "heisenberg") return GroupHandle::heisenberg();
  if (name.rfind("z-inv-", 0) == 0) {
    std::int64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoll(name.substr(6), &used);
      if (used != name.size() - 6) throw std::invalid_argument(name);
    } catch (const std::exception&) {
      throw ConfigError("unknown group preset '" + name + "'");
    }
    if (!is_prime(p)) throw ConfigError("z-inv-<p> needs a prime, got " + name.substr(6));
    GroupHandle g = GroupHandle::rational_subgroup(HeightFunction::inverted_prime(p));
    g.set_name(name);
    return g;
  }
  if (name.size() > 1 && name[0] == 'z') {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(1), &used);
      if (used != name.size() - 1) throw std::invalid_argument(name);
    } catch (const std::exception&) {
      throw ConfigError("unknown group preset '" + name + "'");
    }
    if (n < 1 || n > 512) throw ConfigError("cyclic preset order out of range: " + name);
    return cyclic_group(n);
  }
  throw ConfigError("unknown group preset '" + name + "'");
}

// Family-specific reading of a single window parameter n.
inline WindowSpec default_window(const GroupHandle& g, std::int64_t n) {
  switch (g.family()) {
    case Family::FiniteCayley:
      return WindowSpec::full();
    case Family::IntegersZ:
      return WindowSpec::integers(n);
    case Family::RationalSubgroup:
      return WindowSpec::rationals(n, n);
    case Family::HeisenbergZ:
      return WindowSpec::heisenberg(n);
  }
  throw ConfigError("unhandled family");
}

}  // namespace powergraph
