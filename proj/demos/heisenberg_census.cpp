// Component census of a Heisenberg window: multiplicities of isomorphism
// classes and the locally-cyclic check on every nontrivial component.

#include <iostream>

#include "powergraph/direction.hpp"
#include "powergraph/transforms.hpp"

using namespace powergraph;

int main() {
  GroupHandle g = GroupHandle::heisenberg();
  WindowSpec w = WindowSpec::heisenberg(2);
  PowerGraphBundle b = build_power_graph(g, w, Variant::Zpm, 5000);
  std::cout << "window " << w.str() << ": " << b.carrier.size() << " elements, "
            << b.graph.edge_count() << " edges\n";

  MultiplicityTable table = multiplicity_table(b);
  for (const auto& entry : table.entries)
    std::cout << entry.count << " x (" << entry.vertices << " vertices, " << entry.edges
              << " edges), e.g. component of " << entry.representative_label << "\n";

  std::size_t ok = 0, total = 0;
  for (const auto& comp : connected_components(b.graph)) {
    if (comp.size() < 2) continue;
    ++total;
    if (locally_cyclic_component_check(b, comp, 2 * w.bound)) ++ok;
  }
  std::cout << ok << "/" << total << " nontrivial components locally cyclic\n";
  return 0;
}
