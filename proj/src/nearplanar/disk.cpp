#include <goldenflow/canonical.hpp>
#include <goldenflow/disk.hpp>
#include <goldenflow/flow.hpp>

#include "../common/contraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gf {

GoldenVector evaluate(const ChromaticVector& v, const GoldenNumber& q) {
  return {v.alpha.eval_in(q), v.beta.eval_in(q), v.gamma.eval_in(q)};
}

namespace disk {
namespace {

// Boundary node i carries halfedge i; internal halfedges start at 4.
DiskGraph build(std::vector<DiagramNode> internal, std::vector<std::pair<int, int>> arcs) {
  std::vector<DiagramNode> nodes;
  for (int i = 0; i < 4; ++i) nodes.push_back({NodeKind::Vertex, {i}});
  for (auto& n : internal) nodes.push_back(std::move(n));
  return DiskGraph(std::move(nodes), std::move(arcs), 0, {0, 1, 2, 3});
}

}  // namespace

DiskGraph p0() { return build({}, {{0, 2}, {1, 3}}); }

DiskGraph p1() { return build({}, {{0, 1}, {2, 3}}); }

DiskGraph star() {
  return build({{NodeKind::Vertex, {4, 5, 6, 7}}}, {{0, 4}, {1, 5}, {3, 6}, {2, 7}});
}

DiskGraph i_graph() {
  return build({{NodeKind::Vertex, {4, 5, 6}}, {NodeKind::Vertex, {7, 8, 9}}},
               {{4, 9}, {5, 0}, {6, 1}, {7, 3}, {8, 2}});
}

DiskGraph h_graph() {
  return build({{NodeKind::Vertex, {4, 5, 6}}, {NodeKind::Vertex, {7, 8, 9}}},
               {{4, 8}, {5, 2}, {6, 0}, {7, 3}, {9, 1}});
}

DiskGraph crossing() {
  return build({{NodeKind::Crossing, {4, 5, 6, 7}}}, {{4, 0}, {5, 1}, {6, 3}, {7, 2}});
}

}  // namespace disk

namespace {

void require_disk(const DiskGraph& d) {
  if (d.boundary().size() != 4) throw std::invalid_argument("disk graphs need exactly four boundary points");
}

int boundary_halfedge(const DiskGraph& d, int i) { return d.node(d.boundary()[i]).halfedges[0]; }

}  // namespace

PlanarDiagram glue(const DiskGraph& a, const DiskGraph& b) {
  require_disk(a);
  require_disk(b);
  const int off = a.halfedge_count();
  std::vector<DiagramNode> nodes;
  auto is_boundary = [](const DiskGraph& d, int node) {
    return std::find(d.boundary().begin(), d.boundary().end(), node) != d.boundary().end();
  };
  for (int i = 0; i < a.node_count(); ++i) {
    if (!is_boundary(a, i)) nodes.push_back(a.node(i));
  }
  for (int i = 0; i < b.node_count(); ++i) {
    if (is_boundary(b, i)) continue;
    DiagramNode n = b.node(i);
    for (int& h : n.halfedges) h += off;
    nodes.push_back(std::move(n));
  }
  for (int i = 0; i < 4; ++i) {
    nodes.push_back({NodeKind::Vertex, {boundary_halfedge(a, i), boundary_halfedge(b, i) + off}});
  }
  std::vector<std::pair<int, int>> arcs = a.arcs();
  for (auto [x, y] : b.arcs()) arcs.emplace_back(x + off, y + off);
  return PlanarDiagram(std::move(nodes), std::move(arcs), a.free_circles() + b.free_circles());
}

PlanarDiagram close_disk(const DiskGraph& disk, const DiskGraph& cap) { return glue(disk, cap.reflect()); }

IntPolynomial disk_pairing(const DiskGraph& a, const DiskGraph& b) {
  return flow_polynomial(close_disk(a, b).underlying_graph());
}

MultiGraph disk_multigraph(const DiskGraph& d) {
  require_disk(d);
  MultiGraph g = d.underlying_graph();
  std::vector<int> vid(d.node_count(), -1);
  int next = 0;
  for (int i = 0; i < d.node_count(); ++i) {
    if (d.node(i).kind == NodeKind::Vertex) vid[i] = next++;
  }
  std::vector<int> perm(g.vertex_count(), -1);
  for (int i = 0; i < 4; ++i) perm[vid[d.boundary()[i]]] = i;
  int k = 4;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (perm[v] < 0) perm[v] = k++;
  }
  return g.relabel(perm);
}

namespace {

using detail::Mat;

IntPolynomial loop_value() { return IntPolynomial::linear_root(1); }

// Coefficients for a parallel class of k edges, matching the closed-graph engine.
IntPolynomial contracted_coeff(int k) {
  IntPolynomial sum;
  IntPolynomial power(1);
  for (int i = 0; i < k; ++i) {
    sum += ((k - 1 - i) % 2 ? -power : power);
    power *= loop_value();
  }
  return sum;
}

IntPolynomial deleted_coeff(int k) { return IntPolynomial(k % 2 ? -1 : 1); }

ChromaticVector scale(const ChromaticVector& v, const IntPolynomial& c) {
  return {v.alpha * c, v.beta * c, v.gamma * c};
}

void accumulate(ChromaticVector& acc, const ChromaticVector& v) {
  acc.alpha += v.alpha;
  acc.beta += v.beta;
  acc.gamma += v.gamma;
}

class Expander {
 public:
  ChromaticVector eval(Mat m) {
    IntPolynomial factor(1);
    if (!simplify(m, factor)) return {};
    if (factor.is_zero()) return {};
    std::string key = canonical_key(m.graph(), colours(m.n));
    if (auto it = memo_.find(key); it != memo_.end()) return scale(it->second, factor);
    ChromaticVector result = branch(m);
    memo_.emplace(std::move(key), result);
    return scale(result, factor);
  }

 private:
  static std::vector<int> colours(int n) {
    std::vector<int> c(n, 0);
    for (int i = 0; i < 4; ++i) c[i] = i + 1;
    return c;
  }

  // Internal vertices only are touched; boundary vertices 0..3 keep their indices.
  static bool simplify(Mat& m, IntPolynomial& factor) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 4; v < m.n; ++v) {
        for (int k = 0; k < m.at(v, v); ++k) factor *= loop_value();
        m.at(v, v) = 0;
      }
      std::vector<char> drop(m.n, 0);
      for (int v = 4; v < m.n; ++v) {
        int d = m.degree(v);
        if (d == 0) {
          drop[v] = 1;
          changed = true;
          break;
        }
        if (d == 1) return false;
        if (d == 2) {
          std::vector<int> nb;
          for (int u = 0; u < m.n; ++u) {
            for (int k = 0; u != v && k < m.at(v, u); ++k) nb.push_back(u);
          }
          if (nb[0] == nb[1]) {
            factor *= loop_value();
          } else {
            ++m.at(nb[0], nb[1]);
            ++m.at(nb[1], nb[0]);
          }
          for (int u : nb) m.at(v, u) = m.at(u, v) = 0;
          drop[v] = 1;
          changed = true;
          break;
        }
      }
      if (changed) {
        m = m.without(drop);
        continue;
      }
      // Closed components away from the boundary contribute their flow polynomial.
      MultiGraph g = m.graph();
      auto ids = g.component_ids();
      std::vector<char> closed(m.n, 1);
      for (int i = 0; i < 4; ++i) {
        for (int v = 0; v < m.n; ++v) {
          if (ids[v] == ids[i]) closed[v] = 0;
        }
      }
      if (std::find(closed.begin(), closed.end(), 1) != closed.end()) {
        std::vector<char> open(m.n);
        for (int v = 0; v < m.n; ++v) open[v] = !closed[v];
        factor *= flow_polynomial(m.without(open).graph());
        if (factor.is_zero()) return false;
        m = m.without(closed);
        changed = true;
      }
    }
    for (int i = 0; i < 4; ++i) {
      if (m.degree(i) != 1) throw std::invalid_argument("boundary points must be univalent");
    }
    return true;
  }

  ChromaticVector branch(const Mat& m) {
    int v = -1;
    for (int x = 4; x < m.n; ++x) {
      bool internal_nb = false;
      for (int y = 4; y < m.n; ++y) internal_nb = internal_nb || (y != x && m.at(x, y) > 0);
      if (internal_nb && (v < 0 || m.degree(x) > m.degree(v))) v = x;
    }
    if (v < 0) return terminal(m);
    int u = -1;
    for (int x = 4; x < m.n; ++x) {
      if (x == v || !m.at(v, x)) continue;
      if (u < 0 || m.at(v, x) > m.at(v, u)) u = x;
    }
    int k = m.at(v, u);
    Mat d = m;
    d.at(v, u) = d.at(u, v) = 0;
    Mat c = d;
    for (int x = 0; x < c.n; ++x) {
      if (x == u || x == v) continue;
      c.at(v, x) += c.at(u, x);
      c.at(x, v) += c.at(x, u);
    }
    c.at(v, v) += c.at(u, u);
    std::vector<char> drop(c.n, 0);
    drop[u] = 1;
    c = c.without(drop);
    ChromaticVector result = scale(eval(std::move(c)), contracted_coeff(k));
    accumulate(result, scale(eval(std::move(d)), deleted_coeff(k)));
    return result;
  }

  static ChromaticVector terminal(const Mat& m) {
    if (m.n == 5) {
      for (int i = 0; i < 4; ++i) {
        if (m.at(4, i) != 1) throw std::logic_error("unexpected terminal disk graph");
      }
      return {IntPolynomial(), IntPolynomial(), IntPolynomial(1)};
    }
    if (m.n != 4) throw std::logic_error("unexpected terminal disk graph");
    if (m.at(0, 2) && m.at(1, 3)) return {IntPolynomial(1), IntPolynomial(), IntPolynomial()};
    if (m.at(0, 1) && m.at(2, 3)) return {IntPolynomial(), IntPolynomial(1), IntPolynomial()};
    throw std::logic_error("non-planar boundary pairing 1-4, 2-3 in a disk expansion");
  }

  std::unordered_map<std::string, ChromaticVector> memo_;
};

}  // namespace

ChromaticVector expand_disk_multigraph(const MultiGraph& g) {
  if (g.vertex_count() < 4) throw std::invalid_argument("disk graphs need four boundary vertices");
  Expander ex;
  return ex.eval(Mat::from(g));
}

ChromaticVector expand_disk_graph(const DiskGraph& d) {
  if (d.crossing_count() > 0) throw std::invalid_argument("disk expansion needs a crossing-free disk graph");
  return expand_disk_multigraph(disk_multigraph(d));
}

Gram3 gram_matrix_c2() {
  const std::array<DiskGraph, 3> basis{disk::p0(), disk::p1(), disk::star()};
  Gram3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = disk_pairing(basis[i], basis[j]);
  }
  return m;
}

IntPolynomial gram_determinant(const Gram3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IntPolynomial pair_with_basis(const ChromaticVector& v, const std::array<IntPolynomial, 3>& basis_pairings) {
  return v.alpha * basis_pairings[0] + v.beta * basis_pairings[1] + v.gamma * basis_pairings[2];
}

DiskGraph add_peripheral_edge(const DiskGraph& d, Peripheral where) {
  require_disk(d);
  int i = 0, j = 0;  // j follows i counterclockwise
  switch (where) {
    case Peripheral::Bottom12: i = 0, j = 1; break;
    case Peripheral::Right24: i = 1, j = 3; break;
    case Peripheral::Top34: i = 3, j = 2; break;
    case Peripheral::Left13: i = 2, j = 0; break;
    default: throw std::invalid_argument("invalid peripheral position");
  }
  const int hi = boundary_halfedge(d, i);
  const int hj = boundary_halfedge(d, j);
  const int xi = d.partner(hi);
  const int xj = d.partner(hj);
  const int h = d.halfedge_count();
  const int u_out = h, u_side = h + 1, u_in = h + 2;
  const int v_out = h + 3, v_in = h + 4, v_side = h + 5;
  std::vector<DiagramNode> nodes = d.nodes();
  nodes.push_back({NodeKind::Vertex, {u_out, u_side, u_in}});
  nodes.push_back({NodeKind::Vertex, {v_out, v_in, v_side}});
  std::vector<std::pair<int, int>> arcs;
  for (auto [a, b] : d.arcs()) {
    if (a != hi && b != hi && a != hj && b != hj) arcs.emplace_back(a, b);
  }
  arcs.emplace_back(u_out, hi);
  arcs.emplace_back(v_out, hj);
  arcs.emplace_back(u_side, v_side);
  if (xi == hj) {
    arcs.emplace_back(u_in, v_in);
  } else {
    arcs.emplace_back(xi, u_in);
    arcs.emplace_back(xj, v_in);
  }
  return DiskGraph(std::move(nodes), std::move(arcs), d.free_circles(), d.boundary());
}

Peripheral parse_peripheral(const std::string& s) {
  if (s == "P1") return Peripheral::Bottom12;
  if (s == "P2") return Peripheral::Right24;
  if (s == "P3") return Peripheral::Top34;
  if (s == "P4") return Peripheral::Left13;
  throw std::invalid_argument("unknown peripheral position '" + s + "'");
}

}  // namespace gf
