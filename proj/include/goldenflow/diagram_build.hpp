#pragma once

#include <goldenflow/diagram.hpp>
#include <goldenflow/planarity.hpp>

#include <optional>
#include <vector>

namespace gf {

/// Crossing-free diagram realising a rotation system; halfedge 2e / 2e+1 are the ends of edge e.
PlanarDiagram diagram_from_rotation(const MultiGraph& g, const Rotation& rot);
/// Crossing-free diagram of a planar graph, or nullopt when g is not planar.
std::optional<PlanarDiagram> planar_diagram(const MultiGraph& g);

/// Straight-line drawing with the vertices in convex position; at every crossing the edge with
/// the smaller index passes over. Requires a simple graph.
PlanarDiagram circle_diagram(const MultiGraph& g);

/// Closure of a braid word on `strands` strands: +i is sigma_i, -i its inverse (1-based).
PlanarDiagram braid_closure(int strands, const std::vector<int>& word);

/// A single crossing whose strands close up through adjacent pairs: a kinked circle.
PlanarDiagram kinked_circle();

/// Joins new 2-valent points on the arcs leaving h1 and h2 by a new edge through their common
/// face. Throws std::invalid_argument when h1, h2 do not lie on one face or share an arc.
PlanarDiagram add_chord(const PlanarDiagram& d, int h1, int h2);
/// Every admissible add_chord over pairs of halfedges sharing a face, in face order.
std::vector<PlanarDiagram> chord_diagrams(const PlanarDiagram& d);

struct R2Site {
  int h1 = 0;
  int h2 = 0;
  bool second_over = false;
};

/// Pushes the arc leaving h1 across the arc leaving h2 through their common face.
PlanarDiagram reidemeister2(const PlanarDiagram& d, const R2Site& site);
/// Slides a strand across the crossing opposite it in the triangular face containing h.
PlanarDiagram reidemeister3(const PlanarDiagram& d, int h);

std::vector<R2Site> r2_sites(const PlanarDiagram& d);
/// One halfedge per admissible triangular face.
std::vector<int> r3_sites(const PlanarDiagram& d);

}  // namespace gf
