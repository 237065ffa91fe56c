#include <goldenflow/canonical.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gf {

namespace {

class Canonizer {
 public:
  Canonizer(const MultiGraph& g, const std::vector<int>& colors)
      : n_(g.vertex_count()), mult_(n_ * n_, 0), loops_(n_, 0), user_(colors) {
    if (user_.empty()) user_.assign(n_, 0);
    if (static_cast<int>(user_.size()) != n_) throw std::invalid_argument("colour count mismatch");
    for (auto [a, b] : g.edges()) {
      if (a == b) {
        ++loops_[a];
      } else {
        ++mult_[a * n_ + b];
        ++mult_[b * n_ + a];
      }
    }
    nbrs_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      for (int u = 0; u < n_; ++u) {
        if (mult_[v * n_ + u]) nbrs_[v].push_back(u);
      }
    }
  }

  CanonicalForm run() {
    // Initial colouring from user colour, loop count and degree.
    std::vector<std::vector<long long>> sig(n_);
    for (int v = 0; v < n_; ++v) {
      long long deg = 0;
      for (int u : nbrs_[v]) deg += mult_[v * n_ + u];
      sig[v] = {user_[v], loops_[v], deg};
    }
    std::vector<int> colors = rank(sig);
    refine(colors);
    search(colors);
    CanonicalForm out;
    out.order = best_order_;
    out.key.reserve(best_.size() * 4);
    for (unsigned x : best_) {
      for (int s = 24; s >= 0; s -= 8) out.key.push_back(static_cast<char>((x >> s) & 0xff));
    }
    return out;
  }

 private:
  static std::vector<int> rank(const std::vector<std::vector<long long>>& sig) {
    std::vector<const std::vector<long long>*> uniq;
    for (auto& s : sig) uniq.push_back(&s);
    std::sort(uniq.begin(), uniq.end(), [](auto* a, auto* b) { return *a < *b; });
    uniq.erase(std::unique(uniq.begin(), uniq.end(), [](auto* a, auto* b) { return *a == *b; }),
               uniq.end());
    std::vector<int> out(sig.size());
    for (size_t v = 0; v < sig.size(); ++v) {
      out[v] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), &sig[v],
                           [](auto* a, auto* b) { return *a < *b; }) -
          uniq.begin());
    }
    return out;
  }

  static int count_colors(const std::vector<int>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  void refine(std::vector<int>& colors) const {
    int k = count_colors(colors);
    while (true) {
      std::vector<std::vector<long long>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<long long> nb;
        nb.reserve(nbrs_[v].size());
        for (int u : nbrs_[v]) nb.push_back(static_cast<long long>(colors[u]) * 4096 + mult_[v * n_ + u]);
        std::sort(nb.begin(), nb.end());
        sig[v].reserve(nb.size() + 1);
        sig[v].push_back(colors[v]);
        sig[v].insert(sig[v].end(), nb.begin(), nb.end());
      }
      colors = rank(sig);
      int k2 = count_colors(colors);
      if (k2 == k) return;
      k = k2;
    }
  }

  void search(const std::vector<int>& colors) {
    int k = count_colors(colors);
    if (k == n_) {
      leaf(colors);
      return;
    }
    // Target cell: smallest non-singleton, lowest colour on ties.
    std::vector<int> size(k, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < k; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n_);
      // Shift colours to make room for v just before its cell.
      for (int u = 0; u < n_; ++u) next[u] = colors[u] * 2 + (colors[u] == target && u != v ? 1 : 0);
      std::vector<std::vector<long long>> sig(n_);
      for (int u = 0; u < n_; ++u) sig[u] = {next[u]};
      next = rank(sig);
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[colors[v]] = v;
    std::vector<unsigned> enc;
    enc.reserve(2 + 2 * n_ + n_ * (n_ - 1) / 2);
    enc.push_back(static_cast<unsigned>(n_));
    for (int i = 0; i < n_; ++i) {
      enc.push_back(static_cast<unsigned>(user_[order[i]]));
      enc.push_back(static_cast<unsigned>(loops_[order[i]]));
    }
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) enc.push_back(static_cast<unsigned>(mult_[order[i] * n_ + order[j]]));
    }
    if (best_order_.empty() || enc < best_) {
      best_ = std::move(enc);
      best_order_ = std::move(order);
    }
  }

  int n_;
  std::vector<int> mult_;
  std::vector<int> loops_;
  std::vector<int> user_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<unsigned> best_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalForm canonical_form(const MultiGraph& g, const std::vector<int>& colors) {
  if (g.vertex_count() == 0) {
    return {std::string(4, '\0'), {}};
  }
  return Canonizer(g, colors).run();
}

MultiGraph canonical_graph(const MultiGraph& g) {
  auto form = canonical_form(g);
  std::vector<int> perm(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) perm[form.order[i]] = i;
  MultiGraph h = g.relabel(perm);
  auto edges = h.edges();
  std::sort(edges.begin(), edges.end());
  return MultiGraph(h.vertex_count(), edges);
}

}  // namespace gf
