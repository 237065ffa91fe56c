#pragma once

// Brute-force reference computations used only by the tests. None of them call into the
// recursion engines they are compared against.

#include <goldenflow/bigint.hpp>
#include <goldenflow/int_poly.hpp>
#include <goldenflow/laurent.hpp>
#include <goldenflow/multigraph.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using gf::BigInt;
using gf::MultiGraph;
using gf::Rational;

// Nowhere-zero Z_k flows: every edge gets a value in 1..k-1 along a fixed orientation u -> v,
// and every vertex must balance mod k.
inline long nz_flows(const MultiGraph& g, int k) {
  const int m = g.edge_count();
  if (k <= 1) return m == 0 ? 1 : 0;
  std::vector<int> value(m, 1);
  long count = 0;
  while (true) {
    std::vector<int> net(g.vertex_count(), 0);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edge(e);
      net[u] += value[e];
      net[v] -= value[e];
    }
    bool ok = true;
    for (int x : net) ok = ok && ((x % k) + k) % k == 0;
    count += ok;
    int e = 0;
    while (e < m && value[e] == k - 1) value[e++] = 1;
    if (e == m) break;
    ++value[e];
  }
  return count;
}

// Proper vertex colourings with k colours.
inline long colourings(const MultiGraph& g, int k) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  if (k <= 0) return 0;
  std::vector<int> c(n, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) ok = ok && c[u] != c[v];
    count += ok;
    int i = 0;
    while (i < n && c[i] == k - 1) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return count;
}

// Proper 3-edge-colourings, counted over all 3^E assignments.
inline long edge_3_colourings(const MultiGraph& g) {
  const int m = g.edge_count();
  std::vector<int> c(m, 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      int seen = 0;
      for (int e = 0; e < m && ok; ++e) {
        auto [a, b] = g.edge(e);
        if (a == v && b == v) ok = false;
        if (a == v || b == v) {
          if (seen & (1 << c[e])) ok = false;
          seen |= 1 << c[e];
        }
      }
    }
    count += ok;
    int e = 0;
    while (e < m && c[e] == 2) c[e++] = 0;
    if (e == m) break;
    ++c[e];
  }
  return count;
}

// Newton divided differences over the rationals, expanded into monomial coefficients.
inline gf::IntPolynomial interpolate(const std::vector<std::pair<long, long>>& pts) {
  const std::size_t n = pts.size();
  std::vector<Rational> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = pts[i].second;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / Rational(pts[i].first - pts[i - j].first);
    }
  }
  std::vector<Rational> poly(n, 0);
  std::vector<Rational> basis{1};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) poly[d] += coef[i] * basis[d];
    std::vector<Rational> next(basis.size() + 1, 0);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * pts[i].first;
    }
    basis = next;
  }
  std::vector<BigInt> out;
  for (const auto& c : poly) out.push_back(boost::multiprecision::numerator(c));
  return gf::IntPolynomial(out);
}

// Flow polynomial from brute-force counts at k = 1 .. cyclomatic + 1.
inline gf::IntPolynomial flow_polynomial(const MultiGraph& g) {
  std::vector<std::pair<long, long>> pts;
  for (int k = 1; k <= g.cyclomatic_number() + 1; ++k) pts.push_back({k, nz_flows(g, k)});
  return interpolate(pts);
}

inline gf::IntPolynomial chromatic_polynomial(const MultiGraph& g) {
  std::vector<std::pair<long, long>> pts;
  for (int k = 0; k <= g.vertex_count(); ++k) pts.push_back({k, colourings(g, k)});
  return interpolate(pts);
}

inline double phi() { return std::numbers::phi; }

inline std::complex<double> laurent_at(const gf::LaurentPolynomial& p, std::complex<double> q) {
  std::complex<double> acc = 0;
  for (const auto& [e, c] : p.terms()) acc += static_cast<double>(c) * std::pow(q, e);
  return acc;
}

inline std::complex<double> zeta_pow(long k) { return std::polar(1.0, std::numbers::pi * static_cast<double>(k) / 5.0); }

// Random connected multigraph with loops, built on a spanning tree.
inline MultiGraph random_graph(std::mt19937_64& rng, int vertices, int edges) {
  MultiGraph g(vertices);
  for (int v = 1; v < vertices; ++v) g.add_edge(static_cast<int>(rng() % v), v);
  while (g.edge_count() < edges) {
    g.add_edge(static_cast<int>(rng() % vertices), static_cast<int>(rng() % vertices));
  }
  return g;
}

// Uniformly random relabelling.
inline MultiGraph shuffle(const MultiGraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

}  // namespace oracle
