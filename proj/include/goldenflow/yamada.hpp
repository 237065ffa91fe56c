#pragma once

#include <goldenflow/cyclotomic.hpp>
#include <goldenflow/diagram.hpp>
#include <goldenflow/laurent.hpp>
#include <goldenflow/multigraph.hpp>

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace gf {

class LaurentCache {
 public:
  std::optional<LaurentPolynomial> find(const std::string& key) const;
  void insert(const std::string& key, const LaurentPolynomial& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, LaurentPolynomial> map_;
};

LaurentCache& default_yamada_cache();

struct YamadaOptions {
  LaurentCache* cache = nullptr;
  /// When set, crossings and edges are processed in a pseudo-random order.
  std::optional<std::uint64_t> random_seed;
};

/// R of a crossing-free spatial graph, which depends only on the abstract graph.
/// Isolated vertex -1, loop factor -(q + 1 + q^-1), R = R(G/e) + R(G - e).
LaurentPolynomial yamada_planar_graph(const MultiGraph& g, const YamadaOptions& options);
LaurentPolynomial yamada_planar_graph(const MultiGraph& g);

LaurentPolynomial yamada_polynomial(const PlanarDiagram& d, const YamadaOptions& options);
LaurentPolynomial yamada_polynomial(const PlanarDiagram& d);

/// q = zeta^k, zeta = exp(i pi / 5).
CyclotomicNumber yamada_eval_unit_root(const PlanarDiagram& d, long k);
/// q = +1 or -1.
BigInt yamada_eval_int(const PlanarDiagram& d, long q);

/// Signed count of proper 3-edge-colourings: each crossing whose strands differ in colour
/// contributes -1. Throws std::invalid_argument unless all vertex degrees are 2 or 3.
BigInt penrose_number(const PlanarDiagram& d);

/// Exponent V3 - chi used in the golden identity.
int golden_exponent(const PlanarDiagram& d);

}  // namespace gf
