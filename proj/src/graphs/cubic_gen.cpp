#include <goldenflow/canonical.hpp>
#include <goldenflow/cubic_gen.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace gf {

namespace {

using Bucket = std::map<std::string, MultiGraph>;

void insert(Bucket& out, const MultiGraph& g) {
  auto form = canonical_form(g);
  if (out.count(form.key)) return;
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[form.order[i]] = i;
  auto h = g.relabel(perm);
  auto edges = h.edges();
  std::sort(edges.begin(), edges.end());
  out.emplace(form.key, MultiGraph(h.vertex_count(), edges));
}

// Replaces edge e = (a, b) by a - x - b and returns x.
int subdivide(MultiGraph& g, int e) {
  auto [a, b] = g.edge(e);
  g = g.remove_edge(e);
  int x = g.add_vertex();
  g.add_edge(a, x);
  g.add_edge(x, b);
  return x;
}

void grow(const MultiGraph& g, bool loopless_only, Bucket& out) {
  const int m = g.edge_count();
  for (int e = 0; e < m; ++e) {
    for (int f = e; f < m; ++f) {
      MultiGraph h = g;
      int x = subdivide(h, e);  // edge f now has index f - 1 when f > e
      int y;
      if (f == e) {
        // h ends with a - x, x - b; split x - b.
        y = subdivide(h, h.edge_count() - 1);
      } else {
        y = subdivide(h, f - 1);
      }
      h.add_edge(x, y);
      if (!loopless_only || h.loop_count() == 0) insert(out, h);
    }
    if (!loopless_only) {
      MultiGraph h = g;
      int x = subdivide(h, e);
      int y = h.add_vertex();
      h.add_edge(y, y);
      h.add_edge(x, y);
      insert(out, h);
    }
  }
}

std::vector<MultiGraph> values(const Bucket& b) {
  std::vector<MultiGraph> out;
  out.reserve(b.size());
  for (auto& [k, g] : b) out.push_back(g);
  return out;
}

std::mutex g_levels_mutex;
std::map<int, std::vector<MultiGraph>> g_multi_levels;

const std::vector<MultiGraph>& multi_level(int n) {
  std::lock_guard<std::mutex> lock(g_levels_mutex);
  for (int k = 2; k <= n; k += 2) {
    if (g_multi_levels.count(k)) continue;
    Bucket b;
    if (k == 2) {
      insert(b, MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}));
      insert(b, MultiGraph(2, {{0, 0}, {0, 1}, {1, 1}}));
    } else {
      for (auto& g : g_multi_levels.at(k - 2)) grow(g, false, b);
    }
    g_multi_levels[k] = values(b);
  }
  return g_multi_levels.at(n);
}

}  // namespace

std::vector<MultiGraph> generate_cubic_graphs(int n, bool allow_multi) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("cubic graphs need an even vertex count >= 2");
  if (n > 16) throw std::invalid_argument("vertex count too large for exhaustive generation");
  if (allow_multi) return multi_level(n);
  if (n == 2) return {};
  // Every connected simple cubic graph arises from a loopless one on n - 2 vertices by
  // reversing the removal of a non-bridge edge and suppression of its ends.
  std::vector<MultiGraph> base;
  for (auto& g : multi_level(n - 2)) {
    if (g.loop_count() == 0) base.push_back(g);
  }
  Bucket out;
  for (auto& g : base) {
    Bucket cand;
    grow(g, true, cand);
    for (auto& [k, h] : cand) {
      if (h.is_simple()) out.emplace(k, h);
    }
  }
  return values(out);
}

std::vector<MultiGraph> generate_connected_multigraphs(int m) {
  if (m < 0) throw std::invalid_argument("negative edge count");
  std::vector<MultiGraph> level{MultiGraph(1)};
  for (int step = 0; step < m; ++step) {
    Bucket b;
    for (auto& g : level) {
      int n = g.vertex_count();
      for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
          MultiGraph h = g;
          h.add_edge(u, v);
          insert(b, h);
        }
        MultiGraph h = g;
        int w = h.add_vertex();
        h.add_edge(u, w);
        insert(b, h);
      }
    }
    level = values(b);
  }
  return level;
}

}  // namespace gf
