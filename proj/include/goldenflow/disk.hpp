#pragma once

#include <goldenflow/diagram.hpp>
#include <goldenflow/golden.hpp>
#include <goldenflow/int_poly.hpp>
#include <goldenflow/multigraph.hpp>

#include <array>
#include <string>

namespace gf {

/// A diagram in a disk: boundary() lists four univalent vertex nodes at boundary points 1..4.
/// Points 1, 2 sit at the bottom (left, right) and 3, 4 at the top (left, right), so the
/// counterclockwise order around the disk is 1, 2, 4, 3.
using DiskGraph = PlanarDiagram;

/// Coordinates over the ordered basis (P0, P1, S).
template <class T>
struct BasisVector {
  T alpha{};
  T beta{};
  T gamma{};
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

using ChromaticVector = BasisVector<IntPolynomial>;
using GoldenVector = BasisVector<GoldenNumber>;

GoldenVector evaluate(const ChromaticVector& v, const GoldenNumber& q);

namespace disk {
/// Arcs 1-3 and 2-4.
DiskGraph p0();
/// Arcs 1-2 and 3-4.
DiskGraph p1();
/// One 4-valent vertex joined to every boundary point.
DiskGraph star();
/// Vertex a on points 1, 2 and vertex b on points 3, 4, joined by the edge ab.
DiskGraph i_graph();
/// Vertex a on points 1, 3 and vertex b on points 2, 4, joined by the edge ab.
DiskGraph h_graph();
/// A single crossing pairing 1-4 (over) with 2-3.
DiskGraph crossing();
}  // namespace disk

/// Identifies boundary point i of `a` with boundary point i of `b` through a 2-valent vertex.
/// Planar only when `b` has been reflected; see close_disk.
PlanarDiagram glue(const DiskGraph& a, const DiskGraph& b);
/// Closed diagram obtained by capping `disk` with `cap` drawn in the same disk frame.
PlanarDiagram close_disk(const DiskGraph& disk, const DiskGraph& cap);

/// Flow polynomial of the closed graph; symmetric in its arguments.
IntPolynomial disk_pairing(const DiskGraph& a, const DiskGraph& b);

/// Underlying graph with boundary point i + 1 placed at vertex i.
MultiGraph disk_multigraph(const DiskGraph& d);

/// Contraction-deletion of internal edges down to the basis (P0, P1, S).
/// Throws std::invalid_argument for crossings or a boundary of size other than 4, and
/// std::logic_error if the pairing 1-4, 2-3 shows up as a terminal term.
ChromaticVector expand_disk_graph(const DiskGraph& d);
/// Same, on a graph whose vertices 0..3 are the boundary points.
ChromaticVector expand_disk_multigraph(const MultiGraph& g);

using Gram3 = std::array<std::array<IntPolynomial, 3>, 3>;
/// Pairings of the basis elements, computed by the flow engine.
Gram3 gram_matrix_c2();
IntPolynomial gram_determinant(const Gram3& m);
/// <v, cap> for v given in the basis: sum of coefficients times basis pairings.
IntPolynomial pair_with_basis(const ChromaticVector& v, const std::array<IntPolynomial, 3>& basis_pairings);

/// Peripheral edge positions, named by the boundary points whose edges they join.
enum class Peripheral { Bottom12 = 1, Right24 = 2, Top34 = 3, Left13 = 4 };

/// Joins the edges at two adjacent boundary points by a new edge next to the boundary.
DiskGraph add_peripheral_edge(const DiskGraph& d, Peripheral where);
/// "P1".."P4"; throws std::invalid_argument otherwise.
Peripheral parse_peripheral(const std::string& s);

}  // namespace gf
