#pragma once

#include <goldenflow/multigraph.hpp>

#include <vector>

namespace gf {

/// All connected cubic graphs on n vertices up to isomorphism, in canonical labelling and a
/// deterministic order. allow_multi admits loops and parallel edges. Throws for odd n or n > 16.
std::vector<MultiGraph> generate_cubic_graphs(int n, bool allow_multi);

/// All connected multigraphs (loops allowed, no isolated vertices unless the graph is a single
/// vertex) with exactly m edges, up to isomorphism.
std::vector<MultiGraph> generate_connected_multigraphs(int m);

}  // namespace gf
