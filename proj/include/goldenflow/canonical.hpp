#pragma once

#include <goldenflow/multigraph.hpp>

#include <string>
#include <vector>

namespace gf {

struct CanonicalForm {
  std::string key;         // byte string, equal exactly for isomorphic (coloured) graphs
  std::vector<int> order;  // order[i] = original vertex placed at canonical position i
};

/// Optional colours must have one entry per vertex; isomorphisms must preserve them.
CanonicalForm canonical_form(const MultiGraph& g, const std::vector<int>& colors = {});

inline std::string canonical_key(const MultiGraph& g, const std::vector<int>& colors = {}) {
  return canonical_form(g, colors).key;
}

/// Relabels g so that vertex order[i] becomes i.
MultiGraph canonical_graph(const MultiGraph& g);

}  // namespace gf
