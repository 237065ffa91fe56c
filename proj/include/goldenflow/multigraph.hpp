#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gf {

/// Undirected multigraph; loops and parallel edges allowed. Edge endpoints are stored with u <= v.
class MultiGraph {
 public:
  using Edge = std::pair<int, int>;

  MultiGraph() = default;
  explicit MultiGraph(int vertex_count) : n_(vertex_count) {}
  /// Throws std::invalid_argument on out-of-range endpoints.
  MultiGraph(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }

  int add_vertex() { return n_++; }
  int add_edge(int u, int v);

  /// Loops count twice.
  int degree(int v) const;
  std::vector<int> degrees() const;
  int loop_count() const;

  /// Merges the endpoints of e and removes e. Throws std::invalid_argument for loops.
  MultiGraph contract(int e) const;
  MultiGraph remove_edge(int e) const;
  /// Removes vertex v and its incident edges; later vertices shift down by one.
  MultiGraph remove_vertex(int v) const;
  /// perm[old] = new.
  MultiGraph relabel(const std::vector<int>& perm) const;
  /// Identifies vertex b into vertex a (a != b), then removes b.
  MultiGraph merge_vertices(int a, int b) const;

  /// Component index per vertex, numbered in order of first vertex.
  std::vector<int> component_ids() const;
  int components() const;
  bool is_connected() const { return components() <= 1; }
  int cyclomatic_number() const { return edge_count() - n_ + components(); }

  std::vector<int> bridges() const;
  bool is_bridgeless() const { return bridges().empty(); }
  bool is_cubic() const;
  bool is_simple() const;

  /// Disjoint union; vertices of `other` are shifted by vertex_count().
  MultiGraph disjoint_union(const MultiGraph& other) const;

  std::string str() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace gf
