#pragma once

#include <goldenflow/multigraph.hpp>

#include <string>
#include <vector>

namespace gf::fixtures {

MultiGraph theta();      // two vertices, three parallel edges
MultiGraph dumbbell();   // two loops joined by an edge
MultiGraph digon();
MultiGraph loop();       // one vertex, one loop
MultiGraph k4();
MultiGraph k33();
MultiGraph k5();
MultiGraph petersen();
MultiGraph cube();
MultiGraph prism();      // triangular prism
MultiGraph octahedron();
MultiGraph cycle(int n);
MultiGraph path(int edges);
MultiGraph blanusa();    // first Blanusa snark, 18 vertices

/// Named lookup for the CLI; throws std::invalid_argument for unknown names.
MultiGraph by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace gf::fixtures
