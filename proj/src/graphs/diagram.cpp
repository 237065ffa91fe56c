#include <goldenflow/diagram.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gf {

PlanarDiagram::PlanarDiagram(std::vector<DiagramNode> nodes, std::vector<std::pair<int, int>> arcs,
                             int free_circles, std::vector<int> boundary)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)), free_circles_(free_circles),
      boundary_(std::move(boundary)) {
  if (free_circles_ < 0) throw std::invalid_argument("negative free circle count");
  std::map<int, int> dense;
  for (auto& n : nodes_) {
    if (n.kind == NodeKind::Crossing && n.halfedges.size() != 4) {
      throw std::invalid_argument("a crossing needs exactly four halfedges");
    }
    for (int& h : n.halfedges) {
      if (h < 0) throw std::invalid_argument("negative halfedge id");
      if (!dense.emplace(h, static_cast<int>(dense.size())).second) {
        throw std::invalid_argument("halfedge " + std::to_string(h) + " appears in two node slots");
      }
    }
  }
  std::vector<char> in_arc(dense.size(), 0);
  for (auto& [a, b] : arcs_) {
    for (int* h : {&a, &b}) {
      auto it = dense.find(*h);
      if (it == dense.end()) throw std::invalid_argument("arc uses unknown halfedge " + std::to_string(*h));
      if (in_arc[it->second]++) throw std::invalid_argument("halfedge " + std::to_string(*h) + " in two arcs");
    }
  }
  if (std::find(in_arc.begin(), in_arc.end(), 0) != in_arc.end()) {
    throw std::invalid_argument("a halfedge is not covered by any arc");
  }
  for (auto& n : nodes_) {
    for (int& h : n.halfedges) h = dense[h];
  }
  for (auto& [a, b] : arcs_) {
    a = dense[a];
    b = dense[b];
    if (a > b) std::swap(a, b);
  }
  for (int b : boundary_) {
    if (b < 0 || b >= node_count()) throw std::invalid_argument("boundary node out of range");
    if (nodes_[b].kind != NodeKind::Vertex || nodes_[b].halfedges.size() != 1) {
      throw std::invalid_argument("boundary nodes must be univalent vertices");
    }
  }
  index();
}

void PlanarDiagram::index() {
  int h = 0;
  for (auto& n : nodes_) h += static_cast<int>(n.halfedges.size());
  partner_.assign(h, -1);
  node_of_.assign(h, -1);
  pos_.assign(h, -1);
  for (int i = 0; i < node_count(); ++i) {
    for (int k = 0; k < static_cast<int>(nodes_[i].halfedges.size()); ++k) {
      node_of_[nodes_[i].halfedges[k]] = i;
      pos_[nodes_[i].halfedges[k]] = k;
    }
  }
  for (auto [a, b] : arcs_) {
    partner_[a] = b;
    partner_[b] = a;
  }
}

PlanarDiagram PlanarDiagram::circles(int count) { return PlanarDiagram({}, {}, count); }

int PlanarDiagram::ccw_next(int h) const {
  const auto& hs = nodes_[node_of(h)].halfedges;
  return hs[(pos_[h] + 1) % hs.size()];
}

int PlanarDiagram::ccw_prev(int h) const {
  const auto& hs = nodes_[node_of(h)].halfedges;
  return hs[(pos_[h] + hs.size() - 1) % hs.size()];
}

int PlanarDiagram::opposite(int h) const {
  const auto& n = nodes_[node_of(h)];
  if (n.kind != NodeKind::Crossing) throw std::invalid_argument("opposite: not at a crossing");
  return n.halfedges[(pos_[h] + 2) % 4];
}

std::vector<int> PlanarDiagram::crossings() const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i) {
    if (nodes_[i].kind == NodeKind::Crossing) out.push_back(i);
  }
  return out;
}

int PlanarDiagram::crossing_count() const { return static_cast<int>(crossings().size()); }

int PlanarDiagram::trivalent_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](const DiagramNode& n) {
    return n.kind == NodeKind::Vertex && n.halfedges.size() == 3;
  }));
}

std::vector<std::vector<int>> PlanarDiagram::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(halfedge_count(), 0);
  for (int start = 0; start < halfedge_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> walk;
    for (int h = start; !seen[h]; h = ccw_prev(partner(h))) {
      seen[h] = 1;
      walk.push_back(h);
    }
    out.push_back(std::move(walk));
  }
  return out;
}

static std::vector<int> node_components(const PlanarDiagram& d, int& count) {
  std::vector<int> parent(d.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : d.arcs()) parent[find(d.node_of(a))] = find(d.node_of(b));
  std::vector<int> id(d.node_count()), root(d.node_count(), -1);
  count = 0;
  for (int v = 0; v < d.node_count(); ++v) {
    int r = find(v);
    if (root[r] < 0) root[r] = count++;
    id[v] = root[r];
  }
  return id;
}

int PlanarDiagram::components() const {
  int c = 0;
  node_components(*this, c);
  return c;
}

bool PlanarDiagram::is_plane() const {
  int c = 0;
  auto comp = node_components(*this, c);
  std::vector<long> chi(c, 0);
  for (int v = 0; v < node_count(); ++v) {
    chi[comp[v]] += 1;
    if (nodes_[v].halfedges.empty()) chi[comp[v]] += 1;  // the face around an isolated node
  }
  for (auto [a, b] : arcs_) chi[comp[node_of(a)]] -= 1;
  for (auto& f : faces()) chi[comp[node_of(f.front())]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](long x) { return x == 2; });
}

MultiGraph PlanarDiagram::underlying_graph() const {
  std::vector<int> vid(node_count(), -1);
  MultiGraph g;
  for (int i = 0; i < node_count(); ++i) {
    if (nodes_[i].kind == NodeKind::Vertex) vid[i] = g.add_vertex();
  }
  std::vector<char> used(halfedge_count(), 0);
  for (int h = 0; h < halfedge_count(); ++h) {
    if (used[h] || nodes_[node_of(h)].kind != NodeKind::Vertex) continue;
    used[h] = 1;
    int x = partner(h);
    while (nodes_[node_of(x)].kind == NodeKind::Crossing) {
      int y = opposite(x);
      used[x] = used[y] = 1;
      x = partner(y);
    }
    used[x] = 1;
    g.add_edge(vid[node_of(h)], vid[node_of(x)]);
  }
  for (int h = 0; h < halfedge_count(); ++h) {
    if (used[h]) continue;
    // Closed strand through crossings only.
    int x = h;
    do {
      int y = opposite(x);
      used[x] = used[y] = 1;
      x = partner(y);
    } while (x != h);
    int v = g.add_vertex();
    g.add_edge(v, v);
  }
  for (int i = 0; i < free_circles_; ++i) {
    int v = g.add_vertex();
    g.add_edge(v, v);
  }
  return g;
}

int PlanarDiagram::euler_characteristic() const {
  MultiGraph g = underlying_graph();
  return g.vertex_count() - g.edge_count();
}

PlanarDiagram PlanarDiagram::splice_node(int node, const std::vector<std::pair<int, int>>& pairs) const {
  if (node < 0 || node >= node_count()) throw std::invalid_argument("node out of range");
  if (std::find(boundary_.begin(), boundary_.end(), node) != boundary_.end()) {
    throw std::invalid_argument("cannot splice a boundary node");
  }
  const auto& own = nodes_[node].halfedges;
  std::vector<int> pair_of(halfedge_count(), -1);
  for (auto [a, b] : pairs) {
    if (node_of(a) != node || node_of(b) != node || a == b || pair_of[a] >= 0 || pair_of[b] >= 0) {
      throw std::invalid_argument("splice pairs must match the node's halfedges");
    }
    pair_of[a] = b;
    pair_of[b] = a;
  }
  for (int h : own) {
    if (pair_of[h] < 0) throw std::invalid_argument("splice pairs must cover the node");
  }
  std::vector<char> visited(halfedge_count(), 0);
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : arcs_) {
    if (node_of(a) != node && node_of(b) != node) arcs.emplace_back(a, b);
  }
  for (int e = 0; e < halfedge_count(); ++e) {
    if (node_of(e) == node || node_of(partner(e)) != node || visited[e]) continue;
    visited[e] = 1;
    int x = partner(e);
    while (true) {
      int y = pair_of[x];
      visited[x] = visited[y] = 1;
      int z = partner(y);
      if (node_of(z) != node) {
        visited[z] = 1;
        arcs.emplace_back(e, z);
        break;
      }
      x = z;
    }
  }
  int circles = free_circles_;
  for (int h : own) {
    if (visited[h]) continue;
    ++circles;
    int x = h;
    do {
      int y = pair_of[x];
      visited[x] = visited[y] = 1;
      x = partner(y);
    } while (x != h);
  }
  std::vector<DiagramNode> nodes = nodes_;
  nodes.erase(nodes.begin() + node);
  std::vector<int> boundary = boundary_;
  for (int& b : boundary) {
    if (b > node) --b;
  }
  return PlanarDiagram(std::move(nodes), std::move(arcs), circles, std::move(boundary));
}

PlanarDiagram PlanarDiagram::with_node_kind(int node, NodeKind kind) const {
  PlanarDiagram d = *this;
  d.nodes_.at(node).kind = kind;
  if (kind == NodeKind::Crossing && d.nodes_[node].halfedges.size() != 4) {
    throw std::invalid_argument("a crossing needs exactly four halfedges");
  }
  return d;
}

PlanarDiagram PlanarDiagram::crossing_change(int node) const {
  if (node < 0 || node >= node_count() || nodes_[node].kind != NodeKind::Crossing) {
    throw std::invalid_argument("crossing_change: not a crossing");
  }
  PlanarDiagram d = *this;
  auto& hs = d.nodes_[node].halfedges;
  std::rotate(hs.begin(), hs.begin() + 1, hs.end());
  d.index();
  return d;
}

PlanarDiagram PlanarDiagram::mirror() const {
  PlanarDiagram d = *this;
  for (int c : crossings()) d = d.crossing_change(c);
  return d;
}

PlanarDiagram PlanarDiagram::reflect() const {
  PlanarDiagram d = *this;
  for (auto& n : d.nodes_) {
    if (n.halfedges.size() > 1) std::reverse(n.halfedges.begin() + 1, n.halfedges.end());
  }
  d.index();
  return d;
}

PlanarDiagram PlanarDiagram::suppress_degree2() const {
  PlanarDiagram d = *this;
  while (true) {
    int target = -1;
    for (int i = 0; i < d.node_count(); ++i) {
      const auto& n = d.nodes_[i];
      if (n.kind == NodeKind::Vertex && n.halfedges.size() == 2 &&
          std::find(d.boundary_.begin(), d.boundary_.end(), i) == d.boundary_.end()) {
        target = i;
        break;
      }
    }
    if (target < 0) return d;
    const auto& hs = d.nodes_[target].halfedges;
    d = d.splice_node(target, {{hs[0], hs[1]}});
  }
}

PlanarDiagram PlanarDiagram::disjoint_union(const PlanarDiagram& other) const {
  const int off = halfedge_count();
  std::vector<DiagramNode> nodes = nodes_;
  for (auto n : other.nodes_) {
    for (int& h : n.halfedges) h += off;
    nodes.push_back(std::move(n));
  }
  auto arcs = arcs_;
  for (auto [a, b] : other.arcs_) arcs.emplace_back(a + off, b + off);
  auto boundary = boundary_;
  for (int b : other.boundary_) boundary.push_back(b + node_count());
  return PlanarDiagram(std::move(nodes), std::move(arcs), free_circles_ + other.free_circles_,
                       std::move(boundary));
}

nlohmann::json PlanarDiagram::to_json() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (auto& n : nodes_) {
    nodes.push_back({{"kind", n.kind == NodeKind::Vertex ? "vertex" : "crossing"},
                     {"halfedges", n.halfedges}});
  }
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [a, b] : arcs_) arcs.push_back({a, b});
  return {{"nodes", nodes}, {"arcs", arcs}, {"free_circles", free_circles_}, {"boundary", boundary_}};
}

PlanarDiagram PlanarDiagram::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("arcs")) {
    throw std::invalid_argument("diagram JSON needs \"nodes\" and \"arcs\"");
  }
  std::vector<DiagramNode> nodes;
  for (auto& n : j.at("nodes")) {
    DiagramNode dn;
    std::string kind = n.value("kind", "vertex");
    if (kind == "vertex") {
      dn.kind = NodeKind::Vertex;
    } else if (kind == "crossing") {
      dn.kind = NodeKind::Crossing;
    } else {
      throw std::invalid_argument("unknown node kind: " + kind);
    }
    dn.halfedges = n.at("halfedges").get<std::vector<int>>();
    nodes.push_back(std::move(dn));
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("an arc is a pair of halfedges");
    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  return PlanarDiagram(std::move(nodes), std::move(arcs), j.value("free_circles", 0),
                       j.value("boundary", std::vector<int>{}));
}

CrossingResolution resolve_crossing(const PlanarDiagram& d, int node) {
  if (node < 0 || node >= d.node_count() || d.node(node).kind != NodeKind::Crossing) {
    throw std::invalid_argument("resolve_crossing: node " + std::to_string(node) + " is not a crossing");
  }
  const auto& h = d.node(node).halfedges;
  return {d.splice_node(node, {{h[0], h[1]}, {h[2], h[3]}}),
          d.with_node_kind(node, NodeKind::Vertex),
          d.splice_node(node, {{h[1], h[2]}, {h[3], h[0]}}),
          {LaurentPolynomial::monomial(1), LaurentPolynomial(1), LaurentPolynomial::monomial(-1)}};
}

}  // namespace gf
