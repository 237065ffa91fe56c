#pragma once

#include <goldenflow/laurent.hpp>
#include <goldenflow/multigraph.hpp>

#include <json.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gf {

enum class NodeKind { Vertex, Crossing };

/// Halfedges are listed counterclockwise. For a crossing [h0, h1, h2, h3] the strand h0-h2
/// passes over the strand h1-h3.
struct DiagramNode {
  NodeKind kind = NodeKind::Vertex;
  std::vector<int> halfedges;
  friend bool operator==(const DiagramNode&, const DiagramNode&) = default;
};

/// Ribbon-graph diagram in the plane. Halfedge ids are dense: 0 .. halfedge_count() - 1.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Halfedge ids may be arbitrary non-negative integers; they are renumbered densely.
  /// Throws std::invalid_argument when a halfedge is missing from a node or an arc, or repeated.
  PlanarDiagram(std::vector<DiagramNode> nodes, std::vector<std::pair<int, int>> arcs,
                int free_circles = 0, std::vector<int> boundary = {});

  static PlanarDiagram circles(int count);

  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  const DiagramNode& node(int i) const { return nodes_.at(i); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int free_circles() const { return free_circles_; }
  const std::vector<int>& boundary() const { return boundary_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int halfedge_count() const { return static_cast<int>(partner_.size()); }

  int partner(int h) const { return partner_.at(h); }
  int node_of(int h) const { return node_of_.at(h); }
  int position(int h) const { return pos_.at(h); }
  /// Counterclockwise neighbours of h within its node.
  int ccw_next(int h) const;
  int ccw_prev(int h) const;
  /// The other end of h's strand at a crossing.
  int opposite(int h) const;

  std::vector<int> crossings() const;
  int crossing_count() const;
  /// Vertex nodes of degree 3.
  int trivalent_count() const;

  /// Face boundary walks: each entry lists the halfedges leaving nodes along the walk, with the
  /// face on the left.
  std::vector<std::vector<int>> faces() const;
  /// Connected components of nodes (free circles excluded).
  int components() const;
  /// nodes - arcs + faces == 2 for every component.
  bool is_plane() const;

  /// Crossings become pass-throughs: vertex nodes, plus one looped vertex for each closed
  /// strand without vertices and for each free circle.
  MultiGraph underlying_graph() const;
  /// V - E of the underlying graph.
  int euler_characteristic() const;

  /// Replaces the node by pairwise connections of its halfedges. Closed cycles become circles.
  PlanarDiagram splice_node(int node, const std::vector<std::pair<int, int>>& pairs) const;
  PlanarDiagram with_node_kind(int node, NodeKind kind) const;
  /// Rotating a crossing's list by one switches which strand is over.
  PlanarDiagram crossing_change(int node) const;
  /// Changes every crossing: the mirror image in space.
  PlanarDiagram mirror() const;
  /// Mirror image in the plane: cyclic orders reversed, over/under kept.
  PlanarDiagram reflect() const;
  /// Removes 2-valent vertex nodes (except boundary nodes), merging their arcs.
  PlanarDiagram suppress_degree2() const;
  PlanarDiagram disjoint_union(const PlanarDiagram& other) const;

  nlohmann::json to_json() const;
  static PlanarDiagram from_json(const nlohmann::json& j);

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  void index();

  std::vector<DiagramNode> nodes_;
  std::vector<std::pair<int, int>> arcs_;
  int free_circles_ = 0;
  std::vector<int> boundary_;
  std::vector<int> partner_, node_of_, pos_;
};

/// Three resolutions of a crossing with their coefficients: q^{sign} A + X + q^{-sign} B.
struct CrossingResolution {
  PlanarDiagram a;  // joins (h0,h1) and (h2,h3)
  PlanarDiagram x;  // crossing turned into a 4-valent vertex
  PlanarDiagram b;  // joins (h1,h2) and (h3,h0)
  std::array<LaurentPolynomial, 3> coefficients;
};

/// Throws std::invalid_argument when the node is not a crossing.
CrossingResolution resolve_crossing(const PlanarDiagram& d, int node);

}  // namespace gf
