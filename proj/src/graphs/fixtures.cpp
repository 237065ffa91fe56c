#include <goldenflow/fixtures.hpp>

#include <map>
#include <stdexcept>

namespace gf::fixtures {

MultiGraph theta() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph dumbbell() { return MultiGraph(2, {{0, 0}, {0, 1}, {1, 1}}); }

MultiGraph digon() { return MultiGraph(2, {{0, 1}, {0, 1}}); }

MultiGraph loop() { return MultiGraph(1, {{0, 0}}); }

MultiGraph k4() { return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

MultiGraph k33() {
  MultiGraph g(6);
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) g.add_edge(a, b);
  }
  return g;
}

MultiGraph k5() {
  MultiGraph g(5);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) g.add_edge(a, b);
  }
  return g;
}

MultiGraph petersen() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

MultiGraph cube() {
  MultiGraph g(8);
  for (int v = 0; v < 8; ++v) {
    for (int bit = 1; bit < 8; bit <<= 1) {
      if (v < (v ^ bit)) g.add_edge(v, v ^ bit);
    }
  }
  return g;
}

MultiGraph prism() {
  return MultiGraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

MultiGraph octahedron() {
  MultiGraph g(6);
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      if (b != a + 3) g.add_edge(a, b);
    }
  }
  return g;
}

MultiGraph cycle(int n) {
  if (n < 1) throw std::invalid_argument("cycle needs at least one vertex");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph path(int edges) {
  MultiGraph g(edges + 1);
  for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
  return g;
}

MultiGraph blanusa() {
  // Join a Petersen graph minus two independent edges to a Petersen graph minus two adjacent
  // vertices, matching the four loose ends.
  MultiGraph p = petersen();
  MultiGraph g(18);
  // First copy on vertices 0..9 without outer edges 0-1 and 2-3.
  for (auto [a, b] : p.edges()) {
    if ((a == 0 && b == 1) || (a == 2 && b == 3)) continue;
    g.add_edge(a, b);
  }
  // Second copy without vertices 0 and 1; old vertex v >= 2 becomes v + 8.
  for (auto [a, b] : p.edges()) {
    if (a <= 1 || b <= 1) continue;
    g.add_edge(a + 8, b + 8);
  }
  // Neighbours of removed vertex 0: 4, 5. Neighbours of removed vertex 1: 2, 6.
  g.add_edge(0, 4 + 8);
  g.add_edge(1, 5 + 8);
  g.add_edge(2, 2 + 8);
  g.add_edge(3, 6 + 8);
  return g;
}

namespace {
const std::map<std::string, MultiGraph (*)()>& table() {
  static const std::map<std::string, MultiGraph (*)()> t = {
      {"theta", theta},     {"dumbbell", dumbbell}, {"digon", digon},
      {"loop", loop},       {"k4", k4},             {"k33", k33},
      {"k5", k5},           {"petersen", petersen}, {"cube", cube},
      {"prism", prism},     {"octahedron", octahedron}, {"blanusa", blanusa},
  };
  return t;
}
}  // namespace

MultiGraph by_name(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("unknown graph name: " + name);
  return it->second();
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (auto& [k, v] : table()) out.push_back(k);
  return out;
}

}  // namespace gf::fixtures
