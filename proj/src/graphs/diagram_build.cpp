#include <goldenflow/diagram_build.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <tuple>
#include <set>
#include <stdexcept>

namespace gf {

namespace {

// Arcs of d except those touching any halfedge in `drop`.
std::vector<std::pair<int, int>> arcs_without(const PlanarDiagram& d, const std::set<int>& drop) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : d.arcs()) {
    if (!drop.count(a) && !drop.count(b)) out.emplace_back(a, b);
  }
  return out;
}

int face_of(const std::vector<std::vector<int>>& faces, int h) {
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    if (std::find(faces[f].begin(), faces[f].end(), h) != faces[f].end()) return f;
  }
  return -1;
}

void check_halfedge(const PlanarDiagram& d, int h) {
  if (h < 0 || h >= d.halfedge_count()) throw std::invalid_argument("halfedge out of range");
}

}  // namespace

PlanarDiagram diagram_from_rotation(const MultiGraph& g, const Rotation& rot) {
  std::vector<DiagramNode> nodes;
  for (auto& r : rot) nodes.push_back({NodeKind::Vertex, r});
  std::vector<std::pair<int, int>> arcs;
  for (int e = 0; e < g.edge_count(); ++e) arcs.emplace_back(2 * e, 2 * e + 1);
  return PlanarDiagram(std::move(nodes), std::move(arcs));
}

std::optional<PlanarDiagram> planar_diagram(const MultiGraph& g) {
  auto rot = planar_rotation(g);
  if (!rot) return std::nullopt;
  return diagram_from_rotation(g, *rot);
}

PlanarDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  std::vector<int> dangling(strands, -1), first(strands, -1);
  std::vector<DiagramNode> nodes;
  std::vector<std::pair<int, int>> arcs;
  int next = 0;
  auto attach = [&](int p, int h) {
    if (dangling[p] < 0) {
      first[p] = h;
    } else {
      arcs.emplace_back(dangling[p], h);
    }
  };
  for (int letter : word) {
    int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= strands) throw std::invalid_argument("braid letter out of range");
    int ne = next++, nw = next++, sw = next++, se = next++;
    if (letter > 0) {
      nodes.push_back({NodeKind::Crossing, {ne, nw, sw, se}});
    } else {
      nodes.push_back({NodeKind::Crossing, {nw, sw, se, ne}});
    }
    attach(i, sw);
    attach(i + 1, se);
    dangling[i] = nw;
    dangling[i + 1] = ne;
  }
  int circles = 0;
  for (int p = 0; p < strands; ++p) {
    if (first[p] < 0) {
      ++circles;
    } else {
      arcs.emplace_back(dangling[p], first[p]);
    }
  }
  return PlanarDiagram(std::move(nodes), std::move(arcs), circles);
}

PlanarDiagram kinked_circle() {
  return PlanarDiagram({{NodeKind::Crossing, {0, 1, 2, 3}}}, {{1, 2}, {3, 0}});
}

PlanarDiagram add_chord(const PlanarDiagram& d, int h1, int h2) {
  check_halfedge(d, h1);
  check_halfedge(d, h2);
  auto faces = d.faces();
  if (face_of(faces, h1) != face_of(faces, h2)) throw std::invalid_argument("add_chord: halfedges on different faces");
  int p1 = d.partner(h1), p2 = d.partner(h2);
  if (h1 == h2 || h2 == p1) throw std::invalid_argument("add_chord: both ends on one arc");
  int n = d.halfedge_count();
  int u_fwd = n, u_chord = n + 1, u_back = n + 2;
  int v_fwd = n + 3, v_chord = n + 4, v_back = n + 5;
  auto nodes = d.nodes();
  nodes.push_back({NodeKind::Vertex, {u_fwd, u_chord, u_back}});
  nodes.push_back({NodeKind::Vertex, {v_fwd, v_chord, v_back}});
  auto arcs = arcs_without(d, {h1, h2});
  arcs.insert(arcs.end(), {{h1, u_back}, {u_fwd, p1}, {h2, v_back}, {v_fwd, p2}, {u_chord, v_chord}});
  return PlanarDiagram(std::move(nodes), std::move(arcs), d.free_circles(), d.boundary());
}

PlanarDiagram reidemeister2(const PlanarDiagram& d, const R2Site& s) {
  check_halfedge(d, s.h1);
  check_halfedge(d, s.h2);
  auto faces = d.faces();
  if (face_of(faces, s.h1) != face_of(faces, s.h2)) throw std::invalid_argument("R-II: arcs not on a common face");
  int x1 = s.h1, y1 = d.partner(s.h1), x2 = s.h2, y2 = d.partner(s.h2);
  if (x1 == x2 || x2 == y1) throw std::invalid_argument("R-II: needs two distinct arcs");
  int n = d.halfedge_count();
  int n1 = n, w1 = n + 1, s1 = n + 2, e1 = n + 3;
  int n2 = n + 4, w2 = n + 5, s2 = n + 6, e2 = n + 7;
  auto nodes = d.nodes();
  if (s.second_over) {
    nodes.push_back({NodeKind::Crossing, {w1, s1, e1, n1}});
    nodes.push_back({NodeKind::Crossing, {w2, s2, e2, n2}});
  } else {
    nodes.push_back({NodeKind::Crossing, {n1, w1, s1, e1}});
    nodes.push_back({NodeKind::Crossing, {n2, w2, s2, e2}});
  }
  auto arcs = arcs_without(d, {x1, x2});
  arcs.insert(arcs.end(), {{x1, s1}, {n1, n2}, {s2, y1}, {x2, e2}, {w2, e1}, {w1, y2}});
  return PlanarDiagram(std::move(nodes), std::move(arcs), d.free_circles(), d.boundary());
}

namespace {

struct Triangle {
  std::array<int, 3> t;  // halfedge leaving node k along side k
  std::array<int, 3> p;  // partner of t[k], at node k + 1
};

std::optional<Triangle> triangle_at(const PlanarDiagram& d, int h) {
  auto faces = d.faces();
  int f = face_of(faces, h);
  if (f < 0 || faces[f].size() != 3) return std::nullopt;
  auto walk = faces[f];
  Triangle tri;
  std::set<int> nodes;
  for (int k = 0; k < 3; ++k) {
    tri.t[k] = walk[k];
    tri.p[k] = d.partner(walk[k]);
    int nd = d.node_of(walk[k]);
    if (d.node(nd).kind != NodeKind::Crossing) return std::nullopt;
    nodes.insert(nd);
  }
  if (nodes.size() != 3) return std::nullopt;
  std::set<int> own;
  for (int nd : nodes) {
    for (int x : d.node(nd).halfedges) own.insert(x);
  }
  bool top = false;
  for (int k = 0; k < 3; ++k) {
    if (own.count(d.partner(d.opposite(tri.t[k]))) || own.count(d.partner(d.opposite(tri.p[k])))) {
      return std::nullopt;
    }
    if (d.position(tri.t[k]) % 2 == 0 && d.position(tri.p[k]) % 2 == 0) top = true;
  }
  if (!top) return std::nullopt;  // cyclic over/under pattern
  return tri;
}

}  // namespace

PlanarDiagram reidemeister3(const PlanarDiagram& d, int h) {
  check_halfedge(d, h);
  auto tri = triangle_at(d, h);
  if (!tri) throw std::invalid_argument("R-III: no admissible triangular face at this halfedge");
  std::set<int> drop;
  std::vector<std::pair<int, int>> added;
  for (int k = 0; k < 3; ++k) {
    int t = tri->t[k], p = tri->p[k];
    int ot = d.opposite(t), op = d.opposite(p);
    int oa = d.partner(ot), ob = d.partner(op);
    drop.insert({t, p, ot, op});
    added.insert(added.end(), {{t, ob}, {p, oa}, {ot, op}});
  }
  auto arcs = arcs_without(d, drop);
  arcs.insert(arcs.end(), added.begin(), added.end());
  return PlanarDiagram(d.nodes(), std::move(arcs), d.free_circles(), d.boundary());
}

std::vector<R2Site> r2_sites(const PlanarDiagram& d) {
  std::vector<R2Site> out;
  for (auto& f : d.faces()) {
    for (size_t i = 0; i < f.size(); ++i) {
      for (size_t j = 0; j < f.size(); ++j) {
        if (i == j || f[j] == d.partner(f[i])) continue;
        out.push_back({f[i], f[j], false});
        out.push_back({f[i], f[j], true});
      }
    }
  }
  return out;
}

std::vector<int> r3_sites(const PlanarDiagram& d) {
  std::vector<int> out;
  for (auto& f : d.faces()) {
    if (f.size() == 3 && triangle_at(d, f[0])) out.push_back(f[0]);
  }
  return out;
}

}  // namespace gf

namespace gf {

PlanarDiagram circle_diagram(const MultiGraph& g) {
  if (!g.is_simple()) throw std::invalid_argument("circle drawings need a simple graph");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  // Slightly irregular angles keep three chords from meeting in one point.
  std::vector<std::complex<double>> pos(n);
  for (int k = 0; k < n; ++k) {
    double angle = 2 * M_PI * k / std::max(n, 1) + 0.31 * std::sqrt(2.0 + k) / (n * n + 1.0);
    pos[k] = std::polar(1.0, angle);
  }
  auto direction = [](std::complex<double> from, std::complex<double> to) { return std::arg(to - from); };
  int next = 0;
  std::vector<DiagramNode> nodes(n);
  std::vector<int> at_u(m), at_v(m);
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<double, int>> ends;
    for (int e = 0; e < m; ++e) {
      auto [a, b] = g.edge(e);
      if (a == v) {
        at_u[e] = next;
        ends.emplace_back(direction(pos[v], pos[b]), next++);
      }
      if (b == v) {
        at_v[e] = next;
        ends.emplace_back(direction(pos[v], pos[a]), next++);
      }
    }
    std::sort(ends.begin(), ends.end());
    for (auto& [ang, h] : ends) nodes[v].halfedges.push_back(h);
  }
  // Crossing points along each edge, as (parameter from the first endpoint, back, forward).
  std::vector<std::vector<std::tuple<double, int, int>>> along(m);
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      auto [a, b] = g.edge(e);
      auto [c, d] = g.edge(f);
      if (a == c || a == d || b == c || b == d) continue;
      std::complex<double> p = pos[a], r = pos[b] - pos[a], q = pos[c], s = pos[d] - pos[c];
      double den = r.real() * s.imag() - r.imag() * s.real();
      if (std::abs(den) < 1e-12) continue;
      std::complex<double> qp = q - p;
      double t = (qp.real() * s.imag() - qp.imag() * s.real()) / den;
      double u = (qp.real() * r.imag() - qp.imag() * r.real()) / den;
      if (t <= 0 || t >= 1 || u <= 0 || u >= 1) continue;
      std::complex<double> x = p + t * r;
      int eb = next++, ef = next++, fb = next++, ff = next++;
      std::vector<std::pair<double, int>> ends{{direction(x, pos[a]), eb}, {direction(x, pos[b]), ef},
                                               {direction(x, pos[c]), fb}, {direction(x, pos[d]), ff}};
      std::sort(ends.begin(), ends.end());
      std::vector<int> hs;
      for (auto& [ang, h] : ends) hs.push_back(h);
      auto over = std::find_if(hs.begin(), hs.end(), [&](int h) { return h == eb || h == ef; });
      std::rotate(hs.begin(), over, hs.end());
      nodes.push_back({NodeKind::Crossing, hs});
      along[e].emplace_back(t, eb, ef);
      along[f].emplace_back(u, fb, ff);
    }
  }
  std::vector<std::pair<int, int>> arcs;
  for (int e = 0; e < m; ++e) {
    std::sort(along[e].begin(), along[e].end());
    for (std::size_t i = 1; i < along[e].size(); ++i) {
      if (std::get<0>(along[e][i]) - std::get<0>(along[e][i - 1]) < 1e-9) {
        throw std::logic_error("degenerate circle drawing");
      }
    }
    int tail = at_u[e];
    for (auto& [t, back, fwd] : along[e]) {
      arcs.emplace_back(tail, back);
      tail = fwd;
    }
    arcs.emplace_back(tail, at_v[e]);
  }
  return PlanarDiagram(std::move(nodes), std::move(arcs));
}

std::vector<PlanarDiagram> chord_diagrams(const PlanarDiagram& d) {
  std::vector<PlanarDiagram> out;
  for (const auto& face : d.faces()) {
    for (std::size_t a = 0; a < face.size(); ++a) {
      for (std::size_t b = a + 1; b < face.size(); ++b) {
        try {
          out.push_back(add_chord(d, face[a], face[b]));
        } catch (const std::invalid_argument&) {
        }
      }
    }
  }
  return out;
}

}  // namespace gf
