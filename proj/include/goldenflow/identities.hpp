#pragma once

#include <goldenflow/diagram.hpp>
#include <goldenflow/disk.hpp>
#include <goldenflow/golden.hpp>
#include <goldenflow/multigraph.hpp>
#include <goldenflow/report.hpp>

#include <optional>
#include <vector>

namespace gf {

/// Proper 3-edge-colouring search; graphs with loops are never colourable.
bool is_three_edge_colorable(const MultiGraph& g);
/// Cubic, bridgeless and not 3-edge-colourable.
bool is_snark(const MultiGraph& g);

/// F(phi+2) = phi^E F(phi+1)^2 and (-phi)^E F(z) = F(w)^2. The witness must be a crossing-free
/// diagram of g. Throws std::invalid_argument for non-cubic or bridged input or a bad witness.
Report check_golden_planar(const MultiGraph& g, const PlanarDiagram& witness);

/// R(zeta) = (-1)^{V-E} phi^{E'} R(zeta^8)^2 in Z[zeta], E' = V3 - chi.
/// Throws std::invalid_argument unless all vertex degrees are 2 or 3.
Report check_golden_yamada(const PlanarDiagram& d);

/// F(0) = 3^E F(4)^2 mod 5 when g is planar; nothing else applies to a bare graph.
Report check_mod5(const MultiGraph& g);
/// R(-1) = (-1)^{V-E} 3^E R(1)^2 and F(0) = 3^E R(1)^2 mod 5, plus the planar form when the
/// diagram has no crossings.
Report check_mod5(const PlanarDiagram& d);

/// F(0) mod 5 in {0,1,4} for V/2 even and {0,2,3} for V/2 odd. Non-cubic members are skipped.
Report residue_scan(const std::vector<MultiGraph>& corpus, int jobs = 1);

/// Snark divisibility statements; Penrose number taken on a convex-position drawing.
Report snark_checks(const MultiGraph& g);

/// Pairing form of the linear relation for the I-graph at Q = phi+1 or Q = w, for each
/// crossing-free completion.
Report check_linear_relation(GoldenPoint variant, const std::vector<DiskGraph>& completions);

/// Per-cap golden identities written in the basis coordinates at z and w, their linear
/// dependency for this disk, and agreement of the coordinate pairings with the flow engine.
Report check_appendix(const DiskGraph& d);
/// The dependency between the four quadratic forms as an identity in free coordinates.
Report check_appendix_dependency();
/// (phi^-2 - phi^-4)(A - B) = C - D for the four forms without edge-count
/// factors, on the same grid of free coordinates.
Report check_appendix_unnormalized_dependency();
/// z - 1 = (w - 1)^2.
Report check_loop_values();

/// Substituting the linear relation at q = zeta^-2 into the squared skein expansion reproduces
/// the coefficients (zeta - phi), 2, (zeta^-1 - phi) of the expanded crossing at q = zeta.
Report check_skein_coefficients();

/// Penrose number against R(1) and F(4), and R(-1) against F(0).
Report check_penrose(const PlanarDiagram& d);

}  // namespace gf
