#pragma once

#include <goldenflow/golden.hpp>
#include <goldenflow/int_poly.hpp>
#include <goldenflow/multigraph.hpp>

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace gf {

/// Thread-safe map from canonical graph keys to polynomials. Inserting an existing key is a no-op.
class PolyCache {
 public:
  std::optional<IntPolynomial> find(const std::string& key) const;
  void insert(const std::string& key, const IntPolynomial& value);
  std::size_t size() const;
  void clear();
  /// Snapshot for persistence.
  std::unordered_map<std::string, IntPolynomial> entries() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, IntPolynomial> map_;
};

struct FlowOptions {
  /// nullptr disables memoization.
  PolyCache* cache = nullptr;
  /// When set, branching edges are chosen pseudo-randomly from this seed.
  std::optional<std::uint64_t> random_seed;
};

/// Process-wide cache used by the default options.
PolyCache& default_flow_cache();

/// F_G(Q) by contraction-deletion. Each loop contributes (Q - 1); a bridge gives 0.
IntPolynomial flow_polynomial(const MultiGraph& g);
IntPolynomial flow_polynomial(const MultiGraph& g, const FlowOptions& options);

/// chi_G(Q) by deletion-contraction.
IntPolynomial chromatic_polynomial(const MultiGraph& g);

GoldenNumber flow_eval_golden(const MultiGraph& g, GoldenPoint point);

/// Number of nowhere-zero Z_n flows, counted without the recursion engine.
BigInt nz_flow_count(const MultiGraph& g, int n);
/// Interpolates nz_flow_count at n = 1 .. m + 1, m the cyclomatic number.
IntPolynomial flow_from_oracle(const MultiGraph& g);

}  // namespace gf
