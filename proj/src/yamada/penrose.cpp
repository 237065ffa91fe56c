#include <goldenflow/yamada.hpp>

#include <numeric>
#include <stdexcept>

namespace gf {

namespace {

struct Colouring {
  std::vector<std::array<int, 3>> vertices;  // class ids at trivalent vertices
  std::vector<std::pair<int, int>> crossings;  // class ids of the two strands
  std::vector<std::vector<int>> vertices_of;  // per class, incident trivalent vertices
  std::vector<int> colour;
  BigInt total = 0;

  bool vertex_ok(int v) const {
    const auto& c = vertices[v];
    int a = colour[c[0]], b = colour[c[1]], d = colour[c[2]];
    if (a < 0 || b < 0 || d < 0) return true;
    return a != b && b != d && a != d;
  }

  void search(int k) {
    if (k == static_cast<int>(colour.size())) {
      int sign = 1;
      for (auto [s, t] : crossings) {
        if (colour[s] != colour[t]) sign = -sign;
      }
      total += sign;
      return;
    }
    for (int c = 0; c < 3; ++c) {
      colour[k] = c;
      bool ok = true;
      for (int v : vertices_of[k]) ok = ok && vertex_ok(v);
      if (ok) search(k + 1);
    }
    colour[k] = -1;
  }
};

}  // namespace

BigInt penrose_number(const PlanarDiagram& d) {
  const int h = d.halfedge_count();
  std::vector<int> parent(h);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (auto [a, b] : d.arcs()) unite(a, b);
  for (const auto& n : d.nodes()) {
    const auto& hs = n.halfedges;
    if (n.kind == NodeKind::Crossing) {
      unite(hs[0], hs[2]);
      unite(hs[1], hs[3]);
    } else if (hs.size() == 2) {
      unite(hs[0], hs[1]);
    } else if (hs.size() != 3 && !hs.empty()) {
      throw std::invalid_argument("penrose_number: vertex degrees must be 2 or 3");
    }
  }
  std::vector<int> cls(h, -1);
  int classes = 0;
  // Number classes in halfedge order for a deterministic search.
  std::vector<int> root_id(h, -1);
  for (int x = 0; x < h; ++x) {
    int r = find(x);
    if (root_id[r] < 0) root_id[r] = classes++;
    cls[x] = root_id[r];
  }
  Colouring col;
  col.vertices_of.resize(classes);
  col.colour.assign(classes, -1);
  for (const auto& n : d.nodes()) {
    const auto& hs = n.halfedges;
    if (n.kind == NodeKind::Crossing) {
      col.crossings.emplace_back(cls[hs[0]], cls[hs[1]]);
    } else if (hs.size() == 3) {
      int v = static_cast<int>(col.vertices.size());
      col.vertices.push_back({cls[hs[0]], cls[hs[1]], cls[hs[2]]});
      for (int x : hs) col.vertices_of[cls[x]].push_back(v);
    }
  }
  col.search(0);
  BigInt result = col.total;
  for (int i = 0; i < d.free_circles(); ++i) result *= 3;
  return result;
}

}  // namespace gf
