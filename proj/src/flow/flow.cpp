#include <goldenflow/flow.hpp>

#include "../common/contraction.hpp"

namespace gf {

std::optional<IntPolynomial> PolyCache::find(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void PolyCache::insert(const std::string& key, const IntPolynomial& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  map_.emplace(key, value);
}

std::size_t PolyCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return map_.size();
}

void PolyCache::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  map_.clear();
}

std::unordered_map<std::string, IntPolynomial> PolyCache::entries() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return map_;
}

PolyCache& default_flow_cache() {
  static PolyCache cache;
  return cache;
}

namespace {

struct FlowTraits {
  using Poly = IntPolynomial;
  static Poly one() { return Poly(1); }
  static Poly loop() { return IntPolynomial::linear_root(1); }
  static Poly isolated() { return Poly(1); }
  // F_k = (Q-1)^{k-1} C - F_{k-1}, F_0 = D.
  static Poly contracted_coeff(int k) {
    Poly s;
    for (int i = 0; i < k; ++i) {
      Poly t = loop().pow(static_cast<unsigned>(i));
      s += (k - 1 - i) % 2 ? -t : t;
    }
    return s;
  }
  static Poly deleted_coeff(int k) { return Poly(k % 2 ? -1 : 1); }
};

}  // namespace

IntPolynomial flow_polynomial(const MultiGraph& g, const FlowOptions& options) {
  detail::ContractionEngine<FlowTraits, PolyCache> engine(options.cache, options.random_seed);
  return engine.eval(detail::Mat::from(g));
}

IntPolynomial flow_polynomial(const MultiGraph& g) {
  FlowOptions o;
  o.cache = &default_flow_cache();
  return flow_polynomial(g, o);
}

GoldenNumber flow_eval_golden(const MultiGraph& g, GoldenPoint point) {
  return flow_polynomial(g).eval_in(golden_point(point));
}

}  // namespace gf
