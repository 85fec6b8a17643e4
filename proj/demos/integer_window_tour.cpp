// Walks the integer window graph: twin classes, the component split of the
// nonzero component, and the strong-product decomposition report.

#include <iostream>

#include "powergraph/power_graph.hpp"
#include "powergraph/transforms.hpp"

using namespace powergraph;

int main() {
  GroupHandle g = GroupHandle::integers();
  PowerGraphBundle z = build_power_graph(g, WindowSpec::integers(12), Variant::Z, 5000);
  PowerGraphBundle pm = build_power_graph(g, WindowSpec::integers(12), Variant::Zpm, 5000);

  EquivClassProfile prof = equiv_class_profile(z);
  std::cout << "window |n| <= 12, all-integers variant\n";
  std::cout << "twin blocks:";
  for (const auto& block : prof.window_partition.blocks) {
    std::cout << " {";
    for (std::size_t i = 0; i < block.size(); ++i)
      std::cout << (i ? "," : "") << z.graph.label(block[i]);
    std::cout << "}";
  }
  std::cout << "\ninteger signature: " << (prof.z_signature ? "yes" : "no") << "\n\n";

  for (const auto& comp : connected_components(pm.graph)) {
    if (comp.size() < 2) continue;
    ComponentSplit split = split_component(pm, comp);
    BoxtimesReport rep = verify_boxtimes_decomposition(pm, split);
    std::cout << "nonzero component: " << comp.size() << " vertices, halves of "
              << split.psi1.size() << " and " << split.psi2.size() << "\n";
    std::cout << "halves isomorphic:        " << (rep.psi1_iso_psi2 ? "yes" : "no") << "\n";
    std::cout << "strong product with P2:   " << (rep.phi_iso_psi1_boxtimes_p2 ? "yes" : "no") << "\n";
    std::cout << "twin quotient gives half: " << (rep.psi1_iso_twin_quotient ? "yes" : "no") << "\n";
  }
  return 0;
}
