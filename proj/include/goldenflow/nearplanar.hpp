#pragma once

#include <goldenflow/disk.hpp>
#include <goldenflow/golden.hpp>
#include <goldenflow/report.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gf {

/// Closed diagram: the disk capped by one crossing pairing 1-4 with 2-3.
PlanarDiagram near_planar_diagram(const DiskGraph& d);
/// Abstract graph of the same.
MultiGraph near_planar_graph(const DiskGraph& d);

/// Edge count of the cubic graph obtained by smoothing 2-valent vertices: V3 - (V - E).
int cubic_edge_count(const MultiGraph& g);

struct NearPlanarFlow {
  IntPolynomial flow;
  Report report{"one-crossing flow"};
};

/// F of the near-planar graph from three planar pairings, checked against the direct value.
NearPlanarFlow near_planar_flow(const DiskGraph& d);

/// Quadratic golden identity at z and w, and its linear precursor at z.
Report golden_nearplanar_identity(const DiskGraph& d);

struct GoldenInequality {
  int edges = 0;
  GoldenNumber conjugate_difference;  // (-phi)^E F(z) - F(w)^2
  GoldenNumber golden_difference;     // phi^E F(phi+1)^2 - F(phi+2)
};

GoldenInequality golden_inequality(const MultiGraph& g);
/// Both differences must be >= 0; when `planar` is given, equality must coincide with it.
Report inequality_check(const MultiGraph& g, std::optional<bool> planar = std::nullopt);

/// gamma (alpha + beta + gamma) - (1 + 3 phi) alpha beta.
GoldenNumber basis_inequality_difference(const GoldenVector& v);

/// Yamada restatement at q = exp(4 pi i / 5): F(w)^2 <= R_over R_under, with the product real.
Report yamada_form_check(const DiskGraph& d);

/// Images of P0, P1, S under adding a peripheral edge.
std::array<ChromaticVector, 3> peripheral_matrix(Peripheral where);
/// expand(d + edge) against the position matrix applied to expand(d).
Report recurrence_check(const DiskGraph& d, Peripheral where);
/// sign(alpha) = sign(beta) = -sign(gamma) = (-1)^{V/2} at w whenever all three are nonzero.
Report sign_pattern_check(const DiskGraph& d);

/// Every single-disk check above on one disk graph.
Report near_planar_check(const DiskGraph& d);

struct FamilyMember {
  std::string moves;  // moves applied so far, ';'-separated
  DiskGraph disk;
  std::optional<Peripheral> last;  // edge that produced this member from the previous one
};

/// Splits "T;H;P1;P3" style move lists on ';' or ','.
std::vector<std::string> parse_moves(const std::string& text);

/// Starts from the H-graph. "H" and "I" restart from that seed, "T" adds the vertical edge P4
/// (keeping the tripod shape), "P1".."P4" add peripheral edges. The move list is cycled until
/// `depth` peripheral edges have been added since the last seed.
std::vector<FamilyMember> family_generator(const std::string& moves, int depth);

/// Per member: inequality verdict through the basis coordinates matches the direct verdict,
/// recurrence and sign pattern, and strictness exactly on the non-planar members.
Report family_check(const std::vector<FamilyMember>& members);

}  // namespace gf
