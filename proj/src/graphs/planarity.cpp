#include <goldenflow/planarity.hpp>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace gf {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Subdivides every edge (loops twice) so the embedder sees a simple graph; tag[i] is the
// original halfedge at the original-vertex end of boost edge i, or -1.
struct Subdivided {
  BoostGraph bg;
  std::vector<int> tag;
  int n = 0;

  explicit Subdivided(const MultiGraph& g) : bg(g.vertex_count()), n(g.vertex_count()) {
    int next = n;
    auto add = [&](int a, int b, int t) {
      boost::add_edge(a, b, static_cast<int>(tag.size()), bg);
      tag.push_back(t);
    };
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.edge(e);
      if (a == b) {
        int m1 = next++, m2 = next++;
        boost::add_vertex(bg);
        boost::add_vertex(bg);
        add(a, m1, 2 * e);
        add(m1, m2, -1);
        add(m2, a, 2 * e + 1);
      } else {
        int m = next++;
        boost::add_vertex(bg);
        add(a, m, 2 * e);
        add(m, b, 2 * e + 1);
      }
    }
  }
};

}  // namespace

bool is_planar(const MultiGraph& g) {
  Subdivided s(g);
  return boost::boyer_myrvold_planarity_test(s.bg);
}

std::optional<Rotation> planar_rotation(const MultiGraph& g) {
  Subdivided s(g);
  using EmbeddingStorage = std::vector<std::vector<BoostEdge>>;
  EmbeddingStorage storage(boost::num_vertices(s.bg));
  auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, s.bg));
  bool ok = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = s.bg,
                                                boost::boyer_myrvold_params::embedding = embedding);
  if (!ok) return std::nullopt;
  auto eidx = boost::get(boost::edge_index, s.bg);
  Rotation rot(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (auto& be : storage[v]) rot[v].push_back(s.tag[eidx[be]]);
  }
  return rot;
}

int rotation_face_count(const MultiGraph& g, const Rotation& rot) {
  const int h = 2 * g.edge_count();
  std::vector<int> vertex_of(h), pos(h);
  for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
      vertex_of[rot[v][i]] = v;
      pos[rot[v][i]] = i;
    }
  }
  std::vector<char> seen(h, 0);
  int faces = 0;
  for (int start = 0; start < h; ++start) {
    if (seen[start]) continue;
    ++faces;
    int x = start;
    while (!seen[x]) {
      seen[x] = 1;
      int y = x ^ 1;  // across the edge
      const auto& r = rot[vertex_of[y]];
      int k = static_cast<int>(r.size());
      x = r[(pos[y] + k - 1) % k];
    }
  }
  // Isolated vertices each bound one face of their own component.
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (rot[v].empty()) ++faces;
  }
  return faces;
}

}  // namespace gf
