// End-to-end walkthrough of the library: build drawings whose compaction
// optima encode graph colorings, solve them along three different routes,
// and render one of them to SVG.

#include <cstdio>
#include <fstream>

#include "orthocompact/fpt.hpp"
#include "orthocompact/generators.hpp"
#include "orthocompact/oracle.hpp"
#include "orthocompact/path_compact.hpp"
#include "orthocompact/reductions.hpp"
#include "orthocompact/svg.hpp"

namespace oc = orthocompact;

int main() {
  // 1. A path drawing of the 5-cycle: its row-by-row compaction optimum is
  //    exactly the chromatic number of the cycle.
  {
    oc::Graph c5 = oc::cycle_graph(5);
    oc::Drawing d = oc::build_path_drawing(c5);
    auto res = oc::brute_optimal_compaction(d, oc::row_by_row(), oc::Objective::Rows);
    std::printf("path drawing of C5: %zu nodes, row optimum %lld (chromatic number %d)\n",
                d.nodes.size(), (long long)res.value, oc::brute_chromatic(c5));
  }

  // 2. A bundle drawing of the triangle: the vertical sweep finds the row
  //    optimum and a proper 3-coloring can be read back off the witness.
  {
    oc::Drawing d = oc::build_bundle_drawing(oc::complete_graph(3), 1);
    auto [witness, rows] = oc::optimal_vertical_compaction(d);
    oc::Coloring col = oc::coloring_from_bundle_compaction(d, witness);
    std::printf("bundle drawing of K3: %zu nodes, vertical optimum %d, extracted %d colors\n",
                d.nodes.size(), rows, col.count());
  }

  // 3. A long staircase path collapses to two rows in linear time.
  {
    oc::Drawing st = oc::staircase_drawing(1000);
    oc::Drawing flat = oc::free_compact_path(st);
    std::printf("staircase with %zu nodes free-compacts to %d rows\n", st.nodes.size(),
                (int)oc::metrics(flat).rows);
  }

  // 4. The seven-node tower: its clash graph is a 2-colorable path, yet no
  //    vertex-vertical compaction can save a single row.  Render it.
  {
    oc::Drawing t = oc::counterexample_instance();
    auto res = oc::brute_optimal_compaction(t, oc::vertex_vertical(), oc::Objective::Rows);
    std::printf("tower: %d rows initially, vertex-vertical optimum %lld\n",
                (int)oc::metrics(t).rows, (long long)res.value);
    std::ofstream out("tour_tower.svg");
    out << oc::render_svg(t);
    std::printf("wrote tour_tower.svg\n");
  }
  return 0;
}
