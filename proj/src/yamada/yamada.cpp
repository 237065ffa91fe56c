#include <goldenflow/yamada.hpp>

#include "../common/contraction.hpp"

namespace gf {

std::optional<LaurentPolynomial> LaurentCache::find(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void LaurentCache::insert(const std::string& key, const LaurentPolynomial& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  map_.emplace(key, value);
}

std::size_t LaurentCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return map_.size();
}

LaurentCache& default_yamada_cache() {
  static LaurentCache cache;
  return cache;
}

namespace {

struct YamadaTraits {
  using Poly = LaurentPolynomial;
  static Poly one() { return Poly(1); }
  // A loop at a vertex is a wedge with a circle: -(q + 1 + q^-1).
  static Poly loop() { return -LaurentPolynomial::circle(); }
  static Poly isolated() { return Poly(-1); }
  // R_k = R(G/e) + R_{k-1} with G/e carrying k - 1 loops.
  static Poly contracted_coeff(int k) {
    Poly s, t(1);
    for (int i = 0; i < k; ++i) {
      s += t;
      t *= loop();
    }
    return s;
  }
  static Poly deleted_coeff(int) { return Poly(1); }
};

class DiagramEngine {
 public:
  explicit DiagramEngine(const YamadaOptions& o) : opts_(o) {
    if (o.random_seed) rng_.seed(*o.random_seed ^ 0x9e3779b97f4a7c15ULL);
  }

  LaurentPolynomial eval(const PlanarDiagram& d) {
    auto cs = d.crossings();
    if (cs.empty()) return yamada_planar_graph(d.underlying_graph(), opts_);
    int c = cs.front();
    if (opts_.random_seed) {
      std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
      c = cs[pick(rng_)];
    }
    auto r = resolve_crossing(d, c);
    LaurentPolynomial out = r.coefficients[0] * eval(r.a);
    out += r.coefficients[1] * eval(r.x);
    out += r.coefficients[2] * eval(r.b);
    return out;
  }

 private:
  YamadaOptions opts_;
  std::mt19937_64 rng_;
};

}  // namespace

LaurentPolynomial yamada_planar_graph(const MultiGraph& g, const YamadaOptions& options) {
  detail::ContractionEngine<YamadaTraits, LaurentCache> engine(options.cache, options.random_seed);
  return engine.eval(detail::Mat::from(g));
}

LaurentPolynomial yamada_planar_graph(const MultiGraph& g) {
  YamadaOptions o;
  o.cache = &default_yamada_cache();
  return yamada_planar_graph(g, o);
}

LaurentPolynomial yamada_polynomial(const PlanarDiagram& d, const YamadaOptions& options) {
  DiagramEngine engine(options);
  return engine.eval(d);
}

LaurentPolynomial yamada_polynomial(const PlanarDiagram& d) {
  YamadaOptions o;
  o.cache = &default_yamada_cache();
  return yamada_polynomial(d, o);
}

CyclotomicNumber yamada_eval_unit_root(const PlanarDiagram& d, long k) {
  return eval_laurent_at_unit_root(yamada_polynomial(d), k);
}

BigInt yamada_eval_int(const PlanarDiagram& d, long q) { return yamada_polynomial(d).eval_int(q); }

int golden_exponent(const PlanarDiagram& d) { return d.trivalent_count() - d.euler_characteristic(); }

}  // namespace gf
