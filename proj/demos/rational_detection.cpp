// Distinguishes the full rationals from proper subgroups two ways: height
// classification and the in/out neighbor-preorder symmetry at 1.

#include <iostream>

#include "powergraph/direction.hpp"
#include "powergraph/groups.hpp"

using namespace powergraph;

static void report(const std::string& name, const HeightFunction& h) {
  GroupHandle g = GroupHandle::rational_subgroup(h);
  RationalClassification cls = classify_rational_subgroup(h);
  bool sym = is_rationals_by_neighbor_symmetry(g);
  std::cout << name << " [" << h.str() << "]\n";
  std::cout << "  heights say Q:          " << (cls.is_q ? "yes" : "no");
  if (cls.witness_prime) std::cout << " (witness prime " << *cls.witness_prime << ")";
  std::cout << "\n  neighbor symmetry says: " << (sym ? "yes" : "no") << "\n";

  NeighborPreorder in = neighbor_preorder(g, NeighborPreorder::Side::In, 12);
  std::cout << "  in-classes up to 12:";
  for (std::int64_t n : in.class_reps) std::cout << " {1/" << n << ",-1/" << n << "}";
  if (!in.chains_all_infinite && in.failing_prime)
    std::cout << "  (chain above 1/" << *in.failing_prime << " leaves the group)";
  std::cout << "\n";
}

int main() {
  report("rationals", HeightFunction::all_of_q());
  report("integers", HeightFunction::integers());
  report("z-inv-2", HeightFunction::inverted_prime(2));
  report("height-one", HeightFunction(1, {}));
  return 0;
}
