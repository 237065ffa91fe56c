#pragma once

// Shared contraction-deletion machinery for invariants that satisfy
//   P(G) = a_k(P) * P(G / class) + b_k * P(G - class)
// on a parallel class of k edges, with multiplicative loops and isolated vertices.

#include <goldenflow/canonical.hpp>
#include <goldenflow/multigraph.hpp>

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gf::detail {

// Dense multiplicity matrix; the diagonal holds loop counts.
struct Mat {
  int n = 0;
  std::vector<int> a;
  int& at(int i, int j) { return a[i * n + j]; }
  int at(int i, int j) const { return a[i * n + j]; }

  static Mat from(const MultiGraph& g) {
    Mat m{g.vertex_count(), std::vector<int>(g.vertex_count() * g.vertex_count(), 0)};
    for (auto [u, v] : g.edges()) {
      if (u == v) {
        ++m.at(u, u);
      } else {
        ++m.at(u, v);
        ++m.at(v, u);
      }
    }
    return m;
  }

  MultiGraph graph() const {
    MultiGraph g(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < at(i, i); ++k) g.add_edge(i, i);
      for (int j = i + 1; j < n; ++j) {
        for (int k = 0; k < at(i, j); ++k) g.add_edge(i, j);
      }
    }
    return g;
  }

  int degree(int v) const {
    int d = 2 * at(v, v);
    for (int u = 0; u < n; ++u) {
      if (u != v) d += at(v, u);
    }
    return d;
  }

  Mat without(const std::vector<char>& drop) const {
    std::vector<int> keep;
    for (int v = 0; v < n; ++v) {
      if (!drop[v]) keep.push_back(v);
    }
    Mat m{static_cast<int>(keep.size()), std::vector<int>(keep.size() * keep.size(), 0)};
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) m.at(i, j) = at(keep[i], keep[j]);
    }
    return m;
  }

  Mat permuted(const std::vector<int>& order) const {
    Mat m{n, std::vector<int>(a.size(), 0)};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = at(order[i], order[j]);
    }
    return m;
  }
};

inline std::vector<Mat> split_components(const Mat& m) {
  MultiGraph g = m.graph();
  auto ids = g.component_ids();
  int c = g.components();
  std::vector<Mat> out;
  if (c <= 1) {
    out.push_back(m);
    return out;
  }
  for (int k = 0; k < c; ++k) {
    std::vector<char> drop(m.n);
    for (int v = 0; v < m.n; ++v) drop[v] = ids[v] != k;
    out.push_back(m.without(drop));
  }
  return out;
}

// Traits must provide: using Poly; static Poly one(); static Poly loop(); static Poly isolated();
// static Poly contracted_coeff(int k); static Poly deleted_coeff(int k).
// Cache must provide find(key) -> optional<Poly> and insert(key, Poly).
template <class Traits, class Cache>
class ContractionEngine {
 public:
  using Poly = typename Traits::Poly;

  ContractionEngine(Cache* cache, std::optional<std::uint64_t> seed) : cache_(cache), random_(seed.has_value()) {
    if (seed) rng_.seed(*seed);
  }

  Poly eval(Mat m) {
    Poly factor = Traits::one();
    if (!simplify(m, factor)) return Poly();
    if (m.n == 0) return factor;
    for (auto& part : split_components(m)) {
      factor *= connected(part);
      if (factor.is_zero()) break;
    }
    return factor;
  }

 private:
  // Strips loops, isolated vertices and series vertices. Returns false when a bridge is present.
  static bool simplify(Mat& m, Poly& factor) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < m.n; ++v) {
        for (int k = 0; k < m.at(v, v); ++k) factor *= Traits::loop();
        m.at(v, v) = 0;
      }
      std::vector<char> drop(m.n, 0);
      bool any_drop = false;
      for (int v = 0; v < m.n && !changed; ++v) {
        int d = m.degree(v);
        if (d == 0) {
          factor *= Traits::isolated();
          drop[v] = 1;
          any_drop = true;
        } else if (d == 1) {
          return false;
        } else if (d == 2) {
          std::vector<int> nb;
          for (int u = 0; u < m.n; ++u) {
            for (int k = 0; u != v && k < m.at(v, u); ++k) nb.push_back(u);
          }
          if (nb[0] == nb[1]) {
            factor *= Traits::loop();  // digon collapses to a loop at the neighbour
          } else {
            ++m.at(nb[0], nb[1]);
            ++m.at(nb[1], nb[0]);
          }
          for (int u : nb) m.at(v, u) = m.at(u, v) = 0;
          drop[v] = 1;
          any_drop = true;
          changed = true;
        }
      }
      if (any_drop) {
        m = m.without(drop);
        changed = true;
      }
    }
    return m.n <= 1 || m.graph().is_bridgeless();
  }

  // m is connected, loopless, bridgeless, minimum degree >= 3.
  Poly connected(Mat m) {
    std::string key;
    if (cache_) {
      auto form = canonical_form(m.graph());
      if (auto hit = cache_->find(form.key)) return *hit;
      key = std::move(form.key);
      m = m.permuted(form.order);
    }
    auto [v, u] = choose(m);
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
    Poly result = eval(std::move(c)) * Traits::contracted_coeff(k);
    result += eval(std::move(d)) * Traits::deleted_coeff(k);
    if (cache_) cache_->insert(key, result);
    return result;
  }

  std::pair<int, int> choose(const Mat& m) {
    if (random_) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < m.n; ++i) {
        for (int j = i + 1; j < m.n; ++j) {
          if (m.at(i, j)) pairs.emplace_back(i, j);
        }
      }
      std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
      return pairs[pick(rng_)];
    }
    // Grow one high-degree vertex by absorbing its most strongly attached neighbour.
    int v = 0;
    for (int x = 1; x < m.n; ++x) {
      if (m.degree(x) > m.degree(v)) v = x;
    }
    int u = -1;
    for (int x = 0; x < m.n; ++x) {
      if (x == v || !m.at(v, x)) continue;
      if (u < 0 || m.at(v, x) > m.at(v, u)) u = x;
    }
    return {v, u};
  }

  Cache* cache_;
  bool random_;
  std::mt19937_64 rng_;
};

}  // namespace gf::detail
