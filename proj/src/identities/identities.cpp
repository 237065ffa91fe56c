#include <goldenflow/canonical.hpp>
#include <goldenflow/cyclotomic.hpp>
#include <goldenflow/diagram_build.hpp>
#include <goldenflow/flow.hpp>
#include <goldenflow/identities.hpp>
#include <goldenflow/mod5.hpp>
#include <goldenflow/nearplanar.hpp>
#include <goldenflow/planarity.hpp>
#include <goldenflow/ring_json.hpp>
#include <goldenflow/yamada.hpp>

#include <array>
#include <map>
#include <stdexcept>
#include <thread>

namespace gf {

namespace {

void require_degrees_2_3(const MultiGraph& g) {
  for (int d : g.degrees()) {
    if (d != 2 && d != 3) throw std::invalid_argument("expected vertex degrees 2 and 3");
  }
}

long parity_sign(long n) { return n % 2 == 0 ? 1 : -1; }

Json mod5_json(Mod5 x) { return x.value(); }

}  // namespace

Report check_golden_planar(const MultiGraph& g, const PlanarDiagram& witness) {
  if (!g.is_cubic()) throw std::invalid_argument("golden identity needs a cubic graph");
  if (!g.is_bridgeless()) throw std::invalid_argument("golden identity needs a bridgeless graph");
  if (witness.crossing_count() != 0 || !witness.is_plane()) {
    throw std::invalid_argument("planarity witness must be a crossing-free plane diagram");
  }
  if (canonical_key(witness.underlying_graph()) != canonical_key(g)) {
    throw std::invalid_argument("planarity witness does not draw the given graph");
  }
  Report r("golden identity");
  const GoldenNumber phi = golden::phi(), w = golden::w(), z = golden::z();
  const GoldenNumber p1 = golden_point(GoldenPoint::PhiPlus1), p2 = golden_point(GoldenPoint::PhiPlus2);
  const int e = g.edge_count();
  IntPolynomial f = flow_polynomial(g);
  GoldenNumber f1 = f.eval_in(p1), f2 = f.eval_in(p2), fw = f.eval_in(w), fz = f.eval_in(z);
  r.expect(f2 == phi.pow(e) * f1 * f1, "F(phi+2) = phi^E F(phi+1)^2", to_json(f2), to_json(phi.pow(e) * f1 * f1));
  r.expect((-phi).pow(e) * fz == fw * fw, "(-phi)^E F(z) = F(w)^2", to_json((-phi).pow(e) * fz), to_json(fw * fw));
  r.expect(golden_conjugate(f2) == fz && golden_conjugate(f1) == fw, "conjugation maps phi+2, phi+1 to z, w");
  r.note("edges", e);
  return r;
}

Report check_golden_yamada(const PlanarDiagram& d) {
  MultiGraph g = d.underlying_graph();
  require_degrees_2_3(g);
  Report r("yamada golden identity");
  LaurentPolynomial poly = yamada_polynomial(d);
  const int ep = golden_exponent(d);
  const long sign = parity_sign(g.vertex_count() - g.edge_count());
  CyclotomicNumber lhs = eval_laurent_at_unit_root(poly, 1);
  CyclotomicNumber r8 = eval_laurent_at_unit_root(poly, 8);
  CyclotomicNumber rhs = CyclotomicNumber(sign) * r8 * r8;
  // Keep both sides integral when E' < 0.
  CyclotomicNumber scale = golden_to_cyclotomic(golden::phi().pow(std::abs(ep)));
  if (ep >= 0) {
    rhs *= scale;
  } else {
    lhs *= scale;
  }
  r.expect(lhs == rhs, "R(zeta) = (-1)^(V-E) phi^E' R(zeta^8)^2", to_json(lhs), to_json(rhs));
  r.note("exponent", ep);
  r.note("crossings", d.crossing_count());
  return r;
}

Report check_mod5(const MultiGraph& g) {
  Report r("mod 5 congruences");
  require_degrees_2_3(g);
  Json applied = Json::array();
  if (is_planar(g)) {
    IntPolynomial f = flow_polynomial(g);
    Mod5 lhs(f.eval(0));
    Mod5 f4(f.eval(4));
    Mod5 rhs = Mod5(3).pow(cubic_edge_count(g)) * f4 * f4;
    r.expect(lhs == rhs, "F(0) = 3^E F(4)^2 (mod 5)", mod5_json(lhs), mod5_json(rhs));
    applied.push_back("planar");
  }
  r.note("applied", applied);
  return r;
}

Report check_mod5(const PlanarDiagram& d) {
  Report r("mod 5 congruences");
  MultiGraph g = d.underlying_graph();
  require_degrees_2_3(g);
  LaurentPolynomial poly = yamada_polynomial(d);
  IntPolynomial f = flow_polynomial(g);
  const int ep = golden_exponent(d);
  const Mod5 three_e = Mod5(3).pow(ep);
  Mod5 r1(poly.eval_int(1)), rm1(poly.eval_int(-1));
  Mod5 sign(parity_sign(g.vertex_count() - g.edge_count()));
  r.expect(rm1 == sign * three_e * r1 * r1, "R(-1) = (-1)^(V-E) 3^E R(1)^2 (mod 5)", mod5_json(rm1),
           mod5_json(sign * three_e * r1 * r1));
  Mod5 f0(f.eval(0));
  r.expect(f0 == three_e * r1 * r1, "F(0) = 3^E R(1)^2 (mod 5)", mod5_json(f0), mod5_json(three_e * r1 * r1));
  if (d.crossing_count() == 0) {
    Mod5 f4(f.eval(4));
    r.expect(f0 == three_e * f4 * f4, "F(0) = 3^E F(4)^2 (mod 5)", mod5_json(f0), mod5_json(three_e * f4 * f4));
  }
  return r;
}

Report residue_scan(const std::vector<MultiGraph>& corpus, int jobs) {
  Report r("flow residues at 0");
  std::vector<int> residue(corpus.size(), -1);
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t i = start; i < corpus.size(); i += step) {
      if (!corpus[i].is_cubic()) continue;
      residue[i] = Mod5(flow_polynomial(corpus[i]).eval(0)).value();
    }
  };
  const std::size_t n = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work, t, n);
  work(0, n);
  for (auto& th : pool) th.join();

  std::map<std::string, std::map<std::string, long>> histogram;
  long skipped = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (residue[i] < 0) {
      ++skipped;
      continue;
    }
    bool even = (corpus[i].vertex_count() / 2) % 2 == 0;
    int x = residue[i];
    bool ok = even ? (x == 0 || x == 1 || x == 4) : (x == 0 || x == 2 || x == 3);
    r.expect(ok, "graph " + std::to_string(i) + " residue in the allowed set", x, corpus[i].vertex_count());
    ++histogram[even ? "half_order_even" : "half_order_odd"][std::to_string(x)];
  }
  r.note("graphs", static_cast<long>(corpus.size()));
  r.note("skipped_non_cubic", skipped);
  r.note("histogram", histogram);
  return r;
}

Report snark_checks(const MultiGraph& g) {
  Report r("snark");
  r.expect(is_snark(g), "cubic, bridgeless, not 3-edge-colourable");
  IntPolynomial f = flow_polynomial(g);
  BigInt f0 = f.eval(0);
  r.expect(Mod5(f0).value() == 0, "F(0) = 0 (mod 5)", bigint_to_json(f0));
  r.expect(floor_mod(f0, 120) == 0, "120 divides F(0)", bigint_to_json(f0));
  IntPolynomial falling = IntPolynomial::linear_root(1) * IntPolynomial::linear_root(2) *
                          IntPolynomial::linear_root(3) * IntPolynomial::linear_root(4);
  r.expect(f.divide_exact(falling).has_value(), "(Q-1)(Q-2)(Q-3)(Q-4) divides F", to_json(f));
  BigInt penrose = penrose_number(circle_diagram(g));
  r.expect(penrose == 0, "Penrose number 0", bigint_to_json(penrose));
  r.note("flow_at_0", bigint_to_json(f0));
  return r;
}

Report check_linear_relation(GoldenPoint variant, const std::vector<DiskGraph>& completions) {
  if (variant != GoldenPoint::PhiPlus1 && variant != GoldenPoint::W) {
    throw std::invalid_argument("linear relation is stated at Q = phi+1 and Q = 2-phi");
  }
  Report r(std::string("linear relation at ") + golden_point_name(variant));
  const GoldenNumber phi = golden::phi(), q = golden_point(variant);
  const DiskGraph i_graph = disk::i_graph(), p0 = disk::p0(), p1 = disk::p1();
  for (std::size_t k = 0; k < completions.size(); ++k) {
    const DiskGraph& c = completions[k];
    if (c.crossing_count() != 0) throw std::invalid_argument("completions must be crossing-free");
    GoldenNumber lhs = disk_pairing(i_graph, c).eval_in(q);
    GoldenNumber a = disk_pairing(p0, c).eval_in(q);
    GoldenNumber b = disk_pairing(p1, c).eval_in(q);
    GoldenNumber rhs = variant == GoldenPoint::PhiPlus1 ? phi.inverse() * a - phi.pow(-2) * b : -phi * a - phi * phi * b;
    r.expect(lhs == rhs, "completion " + std::to_string(k), to_json(lhs), to_json(rhs));
  }
  return r;
}

namespace {

// Pairings of the four caps with a disk given by basis coordinates.
template <class T>
std::array<T, 4> cap_rows(const T& q, const BasisVector<T>& v) {
  T one(1), two(2);
  T l = q - one, m = q - two;
  return {v.alpha * l * l + v.beta * l + v.gamma * l * l, v.alpha * l + v.beta * l * l + v.gamma * l * l,
          v.alpha * l * m + v.gamma * l * m * m, v.beta * l * m + v.gamma * l * m * m};
}

const char* const kCapNames[4] = {"P0", "P1", "I", "H"};

std::array<DiskGraph, 4> caps() { return {disk::p0(), disk::p1(), disk::i_graph(), disk::h_graph()}; }

// Normalised quadratic forms: <C,D>_z - s_C <C,D>_w^2.
std::array<GoldenNumber, 4> normalised_forms(const GoldenVector& vz, const GoldenVector& vw,
                                             const std::array<GoldenNumber, 4>& scales) {
  auto rz = cap_rows(golden::z(), vz);
  auto rw = cap_rows(golden::w(), vw);
  std::array<GoldenNumber, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = rz[k] - scales[k] * rw[k] * rw[k];
  return out;
}

// The four forms without edge-count factors.
std::array<GoldenNumber, 4> literal_forms(const GoldenVector& z, const GoldenVector& w) {
  const GoldenNumber p = golden::phi();
  auto ip = [&](long k) { return p.pow(-k); };
  auto sq = [](const GoldenNumber& x) { return x * x; };
  return {z.alpha * ip(4) + z.beta * ip(2) + z.gamma * ip(4) - sq(w.alpha * ip(2) - w.beta * ip(1) + w.gamma * ip(2)),
          z.alpha * ip(2) + z.beta * ip(4) + z.gamma * ip(4) - sq(-w.alpha * ip(1) + w.beta * ip(2) + w.gamma * ip(2)),
          -z.alpha * ip(3) + z.gamma * ip(4) - sq(w.alpha - w.gamma * p),
          -z.beta * ip(3) + z.gamma * ip(4) - sq(w.beta - w.gamma * p)};
}

bool is_cubic_disk(const DiskGraph& d) {
  for (int i = 0; i < d.node_count(); ++i) {
    bool boundary = std::find(d.boundary().begin(), d.boundary().end(), i) != d.boundary().end();
    if (!boundary && (d.node(i).kind != NodeKind::Vertex || d.node(i).halfedges.size() != 3)) return false;
  }
  return true;
}

}  // namespace

Report check_appendix(const DiskGraph& d) {
  if (!is_cubic_disk(d)) throw std::invalid_argument("appendix relations need a crossing-free cubic disk graph");
  Report r("appendix relations");
  const GoldenNumber phi = golden::phi(), z = golden::z(), w = golden::w();
  ChromaticVector ex = expand_disk_graph(d);
  auto caps_list = caps();
  auto rows = cap_rows(IntPolynomial::variable(), ex);
  std::array<GoldenNumber, 4> scales;
  for (int k = 0; k < 4; ++k) {
    IntPolynomial direct = disk_pairing(caps_list[k], d);
    r.expect(rows[k] == direct, std::string("<") + kCapNames[k] + ",D> from coordinates", to_json(rows[k]),
             to_json(direct));
    int e = cubic_edge_count(close_disk(d, caps_list[k]).underlying_graph());
    scales[k] = (-phi).pow(-e);
  }
  GoldenVector vz = evaluate(ex, z), vw = evaluate(ex, w);
  auto forms = normalised_forms(vz, vw, scales);
  const char* labels[4] = {"(A) cap P0", "(B) cap P1", "(C) cap I", "(D) cap H"};
  for (int k = 0; k < 4; ++k) r.expect(forms[k].is_zero(), labels[k], to_json(forms[k]));
  r.expect(forms[0] - forms[1] == forms[2] - forms[3], "A - B = C - D");
  auto lit = literal_forms(vz, vw);
  Json literal = Json::array();
  for (auto& x : lit) literal.push_back(x.is_zero());
  r.note("literal_forms_vanish", literal);
  return r;
}

Report check_appendix_dependency() {
  // The difference (A - B) - (C - D) is a polynomial of degree <= 2 in each of the six
  // coordinates and of degree 1 in the scale s, so vanishing on {0,1,2}^6 x {0,1} proves it.
  // The I and H closures carry three more edges than the P0 and P1 closures.
  Report r("appendix dependency");
  const GoldenNumber step = (-golden::phi()).pow(-3);
  long points = 0;
  Json literal_counterexample = nullptr;
  for (int code = 0; code < 729 * 2; ++code) {
    int c = code;
    std::array<long, 6> x{};
    for (auto& xi : x) {
      xi = c % 3;
      c /= 3;
    }
    GoldenNumber s(static_cast<long>(c));
    GoldenVector vz{x[0], x[1], x[2]}, vw{x[3], x[4], x[5]};
    auto f = normalised_forms(vz, vw, {s, s, s * step, s * step});
    r.expect(f[0] - f[1] == f[2] - f[3], "A - B = C - D at grid point " + std::to_string(code));
    ++points;
    auto lit = literal_forms(vz, vw);
    GoldenNumber k = golden::phi().pow(-2) - golden::phi().pow(-4);
    if (literal_counterexample.is_null() && k * (lit[0] - lit[1]) != lit[2] - lit[3]) {
      literal_counterexample = Json::array({x[0], x[1], x[2], x[3], x[4], x[5]});
    }
  }
  r.note("grid_points", points);
  r.note("unnormalised_relation_counterexample", literal_counterexample);
  return r;
}

Report check_appendix_unnormalized_dependency() {
  Report r("appendix dependency, unnormalized");
  const GoldenNumber k = golden::phi().pow(-2) - golden::phi().pow(-4);
  for (int code = 0; code < 729; ++code) {
    int c = code;
    std::array<long, 6> x{};
    for (auto& xi : x) {
      xi = c % 3;
      c /= 3;
    }
    auto f = literal_forms(GoldenVector{x[0], x[1], x[2]}, GoldenVector{x[3], x[4], x[5]});
    GoldenNumber lhs = k * (f[0] - f[1]), rhs = f[2] - f[3];
    r.expect(lhs == rhs, "grid point " + std::to_string(code), to_json(lhs), to_json(rhs));
  }
  return r;
}

Report check_loop_values() {
  Report r("loop values");
  GoldenNumber lhs = golden::z() - 1;
  GoldenNumber rhs = (golden::w() - 1) * (golden::w() - 1);
  r.expect(lhs == rhs, "z - 1 = (w - 1)^2", to_json(lhs), to_json(rhs));
  return r;
}

Report check_skein_coefficients() {
  Report r("skein coefficients");
  using C = CyclotomicNumber;
  const GoldenNumber phi = golden::phi();
  const C p = golden_to_cyclotomic(phi);
  const C p3 = golden_to_cyclotomic(phi.pow(3));
  const C x = C::zeta_pow(1), xb = C::zeta_pow(-1), y = C::zeta_pow(-2), yb = C::zeta_pow(2);
  // I = ia * (0-resolution) + ib * (1-resolution) at q = zeta^-2.
  const C ia = -golden_to_cyclotomic(phi.inverse()), ib = golden_to_cyclotomic(phi.pow(-2));
  const std::array<C, 3> target{x - p, C(2), xb - p};

  std::array<C, 3> induction{x - p3 * ia * ia, -C(2) * p3 * ia * ib, xb - C(1) - p3 * ib * ib};
  const C la = y + ia, lb = ib + yb - C(1);
  std::array<C, 3> squared{la * la, C(2) * la * lb, lb * lb};
  const char* names[3] = {"a^2", "ab", "b^2"};
  for (int k = 0; k < 3; ++k) {
    r.expect(induction[k] == target[k], std::string("hypothesis side, ") + names[k], to_json(induction[k]),
             to_json(target[k]));
    r.expect(squared[k] == target[k], std::string("squared side, ") + names[k], to_json(squared[k]),
             to_json(target[k]));
  }

  // The same relation on actual diagrams, including a completion with a crossing.
  std::vector<DiskGraph> completions{disk::p0(), disk::p1(), disk::h_graph(), disk::i_graph(), disk::crossing()};
  for (std::size_t k = 0; k < completions.size(); ++k) {
    auto at = [&](const DiskGraph& cap) {
      return eval_laurent_at_unit_root(yamada_polynomial(close_disk(completions[k], cap)), -2);
    };
    C lhs = at(disk::i_graph());
    C rhs = ia * at(disk::p0()) + ib * at(disk::p1());
    r.expect(lhs == rhs, "Yamada linear relation, completion " + std::to_string(k), to_json(lhs), to_json(rhs));
  }
  return r;
}

Report check_penrose(const PlanarDiagram& d) {
  Report r("penrose");
  MultiGraph g = d.underlying_graph();
  require_degrees_2_3(g);
  const BigInt sign = parity_sign(g.vertex_count() - g.edge_count());
  LaurentPolynomial poly = yamada_polynomial(d);
  IntPolynomial f = flow_polynomial(g);
  BigInt r1 = poly.eval_int(1), rm1 = poly.eval_int(-1), f4 = f.eval(4), f0 = f.eval(0);
  BigInt pen = penrose_number(d);
  r.expect(pen == sign * r1, "Penrose number = (-1)^(V-E) R(1)", bigint_to_json(pen), bigint_to_json(sign * r1));
  BigInt mag = r1 < 0 ? BigInt(-r1) : r1;
  r.expect(mag <= f4, "|R(1)| <= F(4)", bigint_to_json(mag), bigint_to_json(f4));
  if (d.crossing_count() == 0) r.expect(mag == f4, "|R(1)| = F(4) without crossings");
  if (f4 != 0 && !is_planar(g)) r.expect(mag < f4, "|R(1)| < F(4) for a non-planar colourable graph");
  r.expect(rm1 == sign * f0, "R(-1) = (-1)^(V-E) F(0)", bigint_to_json(rm1), bigint_to_json(sign * f0));
  return r;
}

}  // namespace gf
