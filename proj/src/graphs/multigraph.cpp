#include <goldenflow/multigraph.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gf {

MultiGraph::MultiGraph(int vertex_count, const std::vector<Edge>& edges) : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (auto [u, v] : edges) add_edge(u, v);
}

int MultiGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return edge_count() - 1;
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> d(n_, 0);
  for (auto [a, b] : edges_) {
    ++d[a];
    ++d[b];
  }
  return d;
}

int MultiGraph::loop_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.first == e.second; }));
}

MultiGraph MultiGraph::contract(int e) const {
  auto [u, v] = edge(e);
  if (u == v) throw std::invalid_argument("cannot contract a loop");
  return remove_edge(e).merge_vertices(u, v);
}

MultiGraph MultiGraph::remove_edge(int e) const {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("edge index out of range");
  MultiGraph g = *this;
  g.edges_.erase(g.edges_.begin() + e);
  return g;
}

MultiGraph MultiGraph::remove_vertex(int v) const {
  MultiGraph g(n_ - 1);
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (auto [a, b] : edges_) {
    if (a == v || b == v) continue;
    g.add_edge(shift(a), shift(b));
  }
  return g;
}

MultiGraph MultiGraph::merge_vertices(int a, int b) const {
  if (a == b) throw std::invalid_argument("merge_vertices: identical vertices");
  MultiGraph g(n_ - 1);
  auto map = [a, b](int x) {
    if (x == b) x = a;
    return x > b ? x - 1 : x;
  };
  for (auto [x, y] : edges_) g.add_edge(map(x), map(y));
  return g;
}

MultiGraph MultiGraph::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: size mismatch");
  MultiGraph g(n_);
  for (auto [a, b] : edges_) g.add_edge(perm[a], perm[b]);
  return g;
}

std::vector<int> MultiGraph::component_ids() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges_) parent[find(a)] = find(b);
  std::vector<int> id(n_, -1), root_id(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    int r = find(v);
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

int MultiGraph::components() const {
  auto ids = component_ids();
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<int> MultiGraph::bridges() const {
  std::vector<std::vector<std::pair<int, int>>> adj(n_);  // (neighbor, edge id)
  for (int e = 0; e < edge_count(); ++e) {
    auto [a, b] = edges_[e];
    if (a == b) continue;
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  std::vector<int> disc(n_, -1), low(n_, 0), out;
  int timer = 0;
  struct Frame {
    int v, parent_edge;
    size_t next;
  };
  for (int s = 0; s < n_; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] >= 0) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) out.push_back(done.parent_edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool MultiGraph::is_cubic() const {
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 3; });
}

bool MultiGraph::is_simple() const {
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i].second) return false;
    if (i > 0 && sorted[i] == sorted[i - 1]) return false;
  }
  return true;
}

MultiGraph MultiGraph::disjoint_union(const MultiGraph& other) const {
  MultiGraph g = *this;
  g.n_ += other.n_;
  for (auto [a, b] : other.edges_) g.add_edge(a + n_, b + n_);
  return g;
}

std::string MultiGraph::str() const {
  std::ostringstream os;
  os << "V=" << n_ << " E={";
  for (size_t i = 0; i < edges_.size(); ++i) {
    os << (i ? " " : "") << edges_[i].first << "-" << edges_[i].second;
  }
  os << "}";
  return os.str();
}

}  // namespace gf
