#include <goldenflow/flow.hpp>
#include <goldenflow/interpolate.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace gf {

namespace {

using Count = unsigned __int128;

// Enumerates Z_n values on the edges outside a BFS spanning forest; forest edges are forced.
Count count_by_cycles(const MultiGraph& g, int n) {
  const int V = g.vertex_count();
  std::vector<int> parent(V, -1), parent_edge(V, -1), order;
  std::vector<char> seen(V, 0), in_tree(g.edge_count(), 0);
  std::vector<std::vector<std::pair<int, int>>> adj(V);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    if (a == b) continue;
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  for (int s = 0; s < V; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      order.push_back(v);
      for (auto [w, e] : adj[v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        parent_edge[w] = e;
        in_tree[e] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> free_edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!in_tree[e]) free_edges.push_back(e);
  }
  // Each edge is oriented from its first to its second endpoint.
  std::vector<int> value(free_edges.size(), 1);
  if (n == 1) return free_edges.empty() && g.edge_count() == 0 ? 1 : 0;
  Count total = 0;
  std::vector<long> excess(V);
  while (true) {
    std::fill(excess.begin(), excess.end(), 0);
    for (std::size_t i = 0; i < free_edges.size(); ++i) {
      auto [a, b] = g.edge(free_edges[i]);
      excess[a] -= value[i];
      excess[b] += value[i];
    }
    bool ok = true;
    for (auto it = order.rbegin(); it != order.rend() && ok; ++it) {
      int v = *it;
      if (parent[v] < 0) continue;
      auto [a, b] = g.edge(parent_edge[v]);
      // Flow x on the tree edge must cancel v's excess.
      long need = ((excess[v] % n) + n) % n;  // amount that has to leave v
      long x = (a == v) ? need : (n - need) % n;
      if (x == 0) ok = false;
      excess[a] -= x;
      excess[b] += x;
    }
    if (ok) ++total;
    std::size_t i = 0;
    while (i < value.size() && ++value[i] == n) value[i++] = 1;
    if (i == value.size()) break;
  }
  return total;
}

// Dynamic programme over edges with the vector of vertex excesses mod n as state.
Count count_by_excess(const MultiGraph& g, int n) {
  const int V = g.vertex_count();
  auto comp = g.component_ids();
  // The last vertex of each component is implied by the others.
  std::vector<int> slot(V, -1), last(g.components(), -1);
  for (int v = 0; v < V; ++v) last[comp[v]] = v;
  int k = 0;
  for (int v = 0; v < V; ++v) {
    if (last[comp[v]] != v) slot[v] = k++;
  }
  std::size_t states = 1;
  for (int i = 0; i < k; ++i) states *= n;
  std::vector<long> stride(k, 1);
  for (int i = 1; i < k; ++i) stride[i] = stride[i - 1] * n;
  std::vector<Count> cur(states, 0), next(states);
  cur[0] = 1;
  Count loop_factor = 1;
  for (auto [a, b] : g.edges()) {
    if (a == b) {
      loop_factor *= static_cast<Count>(n - 1);
      continue;
    }
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s < states; ++s) {
      if (!cur[s]) continue;
      for (int x = 1; x < n; ++x) {
        long t = static_cast<long>(s);
        if (slot[a] >= 0) {
          long da = (t / stride[slot[a]]) % n;
          t += (((da - x) % n + n) % n - da) * stride[slot[a]];
        }
        if (slot[b] >= 0) {
          long db = (t / stride[slot[b]]) % n;
          t += ((db + x) % n - db) * stride[slot[b]];
        }
        next[t] += cur[s];
      }
    }
    std::swap(cur, next);
  }
  return cur[0] * loop_factor;
}

BigInt to_bigint(Count c) {
  BigInt hi = static_cast<unsigned long long>(c >> 64);
  BigInt lo = static_cast<unsigned long long>(c);
  return (hi << 64) + lo;
}

}  // namespace

BigInt nz_flow_count(const MultiGraph& g, int n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (g.edge_count() * std::log2(std::max(2, n)) > 120) {
    throw std::invalid_argument("flow count may exceed the counter width");
  }
  const int m = g.cyclomatic_number();
  const int r = g.vertex_count() - g.components();
  double cycle_cost = m * std::log(std::max(1, n - 1));
  double excess_cost = r * std::log(n);
  if (n == 1 || cycle_cost <= excess_cost) return to_bigint(count_by_cycles(g, n));
  return to_bigint(count_by_excess(g, n));
}

IntPolynomial flow_from_oracle(const MultiGraph& g) {
  const int m = g.cyclomatic_number();
  std::vector<std::pair<BigInt, BigInt>> samples;
  for (int n = 1; n <= m + 1; ++n) samples.emplace_back(n, nz_flow_count(g, n));
  return lagrange_interpolate(samples, m);
}

}  // namespace gf
