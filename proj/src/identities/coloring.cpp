#include <goldenflow/identities.hpp>

#include <algorithm>
#include <queue>

namespace gf {

namespace {

class EdgeColouring {
 public:
  explicit EdgeColouring(const MultiGraph& g) : g_(g), incident_(g.vertex_count()), colour_(g.edge_count(), -1) {
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      incident_[u].push_back(e);
      incident_[v].push_back(e);
    }
    // Breadth-first edge order keeps constrained edges close together.
    std::vector<char> seen(g.edge_count(), 0);
    std::vector<char> visited(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
      if (visited[s]) continue;
      std::queue<int> q;
      q.push(s);
      visited[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : incident_[v]) {
          if (!seen[e]) {
            seen[e] = 1;
            order_.push_back(e);
          }
          auto [a, b] = g.edge(e);
          int o = a == v ? b : a;
          if (!visited[o]) {
            visited[o] = 1;
            q.push(o);
          }
        }
      }
    }
  }

  bool solve(std::size_t k = 0) {
    if (k == order_.size()) return true;
    int e = order_[k];
    auto [u, v] = g_.edge(e);
    for (int c = 0; c < 3; ++c) {
      if (k == 0 && c > 0) break;  // colour symmetry
      if (clashes(u, c) || clashes(v, c)) continue;
      colour_[e] = c;
      if (solve(k + 1)) return true;
      colour_[e] = -1;
    }
    return false;
  }

 private:
  bool clashes(int v, int c) const {
    return std::any_of(incident_[v].begin(), incident_[v].end(), [&](int f) { return colour_[f] == c; });
  }

  const MultiGraph& g_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> colour_;
  std::vector<int> order_;
};

}  // namespace

bool is_three_edge_colorable(const MultiGraph& g) {
  if (g.loop_count() > 0) return false;
  for (int d : g.degrees()) {
    if (d > 3) return false;
  }
  EdgeColouring search(g);
  return search.solve();
}

bool is_snark(const MultiGraph& g) { return g.is_cubic() && g.is_bridgeless() && !is_three_edge_colorable(g); }

}  // namespace gf
