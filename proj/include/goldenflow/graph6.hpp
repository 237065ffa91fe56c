#pragma once

#include <goldenflow/errors.hpp>
#include <goldenflow/multigraph.hpp>

#include <string>
#include <string_view>

namespace gf {

/// Simple graphs only. Throws ParseError.
MultiGraph parse_graph6(std::string_view line);
/// Throws std::invalid_argument for graphs with loops or parallel edges.
std::string write_graph6(const MultiGraph& g);

/// Multigraphs with loops. The line starts with ':'.
MultiGraph parse_sparse6(std::string_view line);
std::string write_sparse6(const MultiGraph& g);

/// Dispatches on the leading ':' and strips an optional ">>graph6<<" / ">>sparse6<<" header.
MultiGraph parse_graph_line(std::string_view line);

}  // namespace gf
