#include <goldenflow/flow.hpp>

#include <algorithm>
#include <set>

namespace gf {

namespace {

IntPolynomial chromatic_simple(int n, std::vector<std::pair<int, int>> edges) {
  if (edges.empty()) return IntPolynomial::variable().pow(static_cast<unsigned>(n));
  auto e = edges.back();
  edges.pop_back();
  IntPolynomial deleted = chromatic_simple(n, edges);
  // Contract: vertex e.second merges into e.first, then relabel down.
  auto map = [&](int x) {
    if (x == e.second) x = e.first;
    return x > e.second ? x - 1 : x;
  };
  std::set<std::pair<int, int>> merged;
  for (auto [a, b] : edges) {
    int x = map(a), y = map(b);
    if (x != y) merged.emplace(std::min(x, y), std::max(x, y));
  }
  IntPolynomial contracted = chromatic_simple(n - 1, {merged.begin(), merged.end()});
  return deleted - contracted;
}

}  // namespace

IntPolynomial chromatic_polynomial(const MultiGraph& g) {
  std::set<std::pair<int, int>> simple;
  for (auto [a, b] : g.edges()) {
    if (a == b) return IntPolynomial();
    simple.emplace(a, b);
  }
  return chromatic_simple(g.vertex_count(), {simple.begin(), simple.end()});
}

}  // namespace gf
