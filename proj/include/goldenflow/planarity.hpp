#pragma once

#include <goldenflow/multigraph.hpp>

#include <optional>
#include <vector>

namespace gf {

/// Halfedge 2e is the end of edge e at its first endpoint, 2e + 1 at its second.
using Rotation = std::vector<std::vector<int>>;

bool is_planar(const MultiGraph& g);

/// Cyclic order of halfedges around each vertex for some planar embedding, or nullopt.
std::optional<Rotation> planar_rotation(const MultiGraph& g);

/// Number of faces traced by a rotation system, summed over components.
int rotation_face_count(const MultiGraph& g, const Rotation& rot);

}  // namespace gf
