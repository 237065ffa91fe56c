#include "oracles.hpp"

#include <goldenflow/cubic_gen.hpp>
#include <goldenflow/diagram_build.hpp>
#include <goldenflow/fixtures.hpp>
#include <goldenflow/flow.hpp>
#include <goldenflow/identities.hpp>
#include <goldenflow/nearplanar.hpp>
#include <goldenflow/planarity.hpp>
#include <goldenflow/yamada.hpp>

#include <doctest.h>

using namespace gf;

namespace {

int mod5(const BigInt& x) { return static_cast<int>(((x % 5) + 5) % 5); }

std::vector<PlanarDiagram> spatial_samples() {
  std::vector<PlanarDiagram> out = {*planar_diagram(fixtures::theta()), *planar_diagram(fixtures::k4()),
                                    *planar_diagram(fixtures::cube()), circle_diagram(fixtures::k4()),
                                    circle_diagram(fixtures::k33()), braid_closure(2, {1, 1, 1}),
                                    braid_closure(2, {1, 1})};
  auto chords = chord_diagrams(braid_closure(2, {1, 1, 1}));
  for (std::size_t i = 0; i < chords.size(); i += 4) out.push_back(chords[i]);
  return out;
}

std::vector<DiskGraph> completion_disks() {
  std::vector<DiskGraph> out = {disk::p0(), disk::p1(), disk::star(), disk::i_graph(), disk::h_graph()};
  for (auto p : {Peripheral::Bottom12, Peripheral::Right24, Peripheral::Top34, Peripheral::Left13}) {
    out.push_back(add_peripheral_edge(disk::h_graph(), p));
    out.push_back(add_peripheral_edge(disk::i_graph(), p));
  }
  return out;
}

}  // namespace

TEST_CASE("3-edge-colourability against exhaustive search") {
  for (int n = 4; n <= 10; n += 2) {
    for (const auto& g : generate_cubic_graphs(n, true)) {
      if (g.edge_count() > 12) continue;
      CHECK(is_three_edge_colorable(g) == (oracle::edge_3_colourings(g) > 0));
    }
  }
  CHECK_FALSE(is_three_edge_colorable(fixtures::petersen()));
  CHECK(is_snark(fixtures::petersen()));
  CHECK(is_snark(fixtures::blanusa()));
  CHECK_FALSE(is_snark(fixtures::k33()));
  CHECK_FALSE(is_snark(fixtures::dumbbell()));
  CHECK(is_three_edge_colorable(fixtures::cube()));
}

TEST_CASE("golden identity on plane cubic graphs") {
  for (int n = 2; n <= 10; n += 2) {
    for (const auto& g : generate_cubic_graphs(n, true)) {
      if (!g.is_bridgeless()) continue;
      auto d = planar_diagram(g);
      if (!d) continue;
      CHECK(check_golden_planar(g, *d).passed());
      // Same statement, evaluated in floating point from the flow polynomial.
      const IntPolynomial f = flow_polynomial(g);
      const double p = oracle::phi();
      auto at = [&](double x) {
        double acc = 0;
        for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + static_cast<double>(*it);
        return acc;
      };
      const double e = g.edge_count();
      CHECK(at(p + 2) == doctest::Approx(std::pow(p, e) * at(p + 1) * at(p + 1)).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(check_golden_planar(fixtures::k4(), *planar_diagram(fixtures::cube())), std::invalid_argument);
}

TEST_CASE("golden identity fails off the plane") {
  // The real identity needs planarity: K33 and Petersen violate it.
  for (const char* name : {"k33", "petersen"}) {
    CAPTURE(name);
    MultiGraph g = fixtures::by_name(name);
    const IntPolynomial f = flow_polynomial(g);
    const GoldenNumber lhs = f.eval_in(golden::phi() + 2);
    const GoldenNumber rhs = golden::phi().pow(g.edge_count()) * f.eval_in(golden::phi() + 1).pow(2);
    CHECK(lhs != rhs);
  }
}

TEST_CASE("golden identity for spatial graphs") {
  for (const auto& d : spatial_samples()) {
    Report r = check_golden_yamada(d);
    CHECK(r.passed());
    // Floating-point version: R(zeta) = (-1)^{V-E} phi^{E'} R(zeta^8)^2.
    const LaurentPolynomial y = yamada_polynomial(d);
    const auto lhs = oracle::laurent_at(y, oracle::zeta_pow(1));
    const auto r8 = oracle::laurent_at(y, oracle::zeta_pow(8));
    const double sign = d.euler_characteristic() % 2 == 0 ? 1.0 : -1.0;
    const auto rhs = sign * std::pow(oracle::phi(), golden_exponent(d)) * r8 * r8;
    CHECK(std::abs(lhs - rhs) < 1e-6 * (1 + std::abs(lhs)));
  }
}

TEST_CASE("mod 5 congruences") {
  for (const auto& d : spatial_samples()) {
    CHECK(check_mod5(d).passed());
    const LaurentPolynomial y = yamada_polynomial(d);
    const BigInt r1 = y.eval_int(1), rm1 = y.eval_int(-1);
    const int sign = d.euler_characteristic() % 2 == 0 ? 1 : 4;
    BigInt three = 1;
    for (int k = 0; k < golden_exponent(d); ++k) three *= 3;
    CHECK(mod5(rm1) == mod5(BigInt(sign) * three * r1 * r1));
  }
  for (const char* name : {"k4", "cube", "prism", "petersen", "k33"}) {
    CHECK(check_mod5(fixtures::by_name(name)).passed());
  }
}

TEST_CASE("flow residues at zero") {
  std::vector<MultiGraph> corpus;
  for (int n = 2; n <= 10; n += 2) {
    for (const auto& g : generate_cubic_graphs(n, true)) corpus.push_back(g);
  }
  CHECK(residue_scan(corpus, 1).passed());
  CHECK(residue_scan(corpus, 2).to_json() == residue_scan(corpus, 1).to_json());
  for (const auto& g : corpus) {
    if (!g.is_bridgeless()) continue;
    const int r = mod5(flow_polynomial(g).eval(0));
    const bool even = (g.vertex_count() / 2) % 2 == 0;
    CHECK((even ? (r == 0 || r == 1 || r == 4) : (r == 0 || r == 2 || r == 3)));
  }
}

TEST_CASE("snark statements") {
  CHECK(snark_checks(fixtures::petersen()).passed());
  CHECK(snark_checks(fixtures::blanusa()).passed());
  CHECK(flow_polynomial(fixtures::petersen()).eval(4) == 0);
}

TEST_CASE("linear relations and skein coefficients") {
  CHECK(check_linear_relation(GoldenPoint::PhiPlus1, completion_disks()).passed());
  CHECK(check_linear_relation(GoldenPoint::W, completion_disks()).passed());
  CHECK(check_skein_coefficients().passed());
  // The relation at phi + 1 by hand for one cap: <I,C> = phi^-1 <P0,C> - phi^-2 <P1,C>.
  const GoldenNumber q = golden::phi() + 1;
  const DiskGraph cap = add_peripheral_edge(disk::h_graph(), Peripheral::Bottom12);
  const GoldenNumber i = disk_pairing(disk::i_graph(), cap).eval_in(q);
  const GoldenNumber p0 = disk_pairing(disk::p0(), cap).eval_in(q);
  const GoldenNumber p1 = disk_pairing(disk::p1(), cap).eval_in(q);
  CHECK(i == golden::phi().pow(-1) * p0 - golden::phi().pow(-2) * p1);
}

TEST_CASE("normalized appendix forms") {
  for (const auto& d : completion_disks()) {
    if (d == disk::star()) {
      CHECK_THROWS_AS(check_appendix(d), std::invalid_argument);
      continue;
    }
    CHECK(check_appendix(d).passed());
  }
  CHECK(check_appendix_dependency().passed());
  CHECK(check_loop_values().passed());
  CHECK(golden::z() - 1 == (golden::w() - 1).pow(2));
}

TEST_CASE("penrose number") {
  for (const auto& d : spatial_samples()) {
    bool degrees_ok = true;
    for (int v : d.underlying_graph().degrees()) degrees_ok = degrees_ok && (v == 2 || v == 3);
    if (!degrees_ok) continue;
    CHECK(check_penrose(d).passed());
    const LaurentPolynomial y = yamada_polynomial(d);
    const int sign = d.euler_characteristic() % 2 == 0 ? 1 : -1;
    CHECK(penrose_number(d) == sign * y.eval_int(1));
  }
  // Crossing-free drawings: equality with F(4).
  for (const char* name : {"k4", "cube", "prism"}) {
    PlanarDiagram d = *planar_diagram(fixtures::by_name(name));
    CHECK(penrose_number(d) == flow_polynomial(fixtures::by_name(name)).eval(4));
  }
  // K33 drawn with crossings: strictly below F(4).
  PlanarDiagram k33 = circle_diagram(fixtures::k33());
  BigInt pen = penrose_number(k33);
  CHECK((pen < 0 ? BigInt(-pen) : pen) < flow_polynomial(fixtures::k33()).eval(4));
}

TEST_CASE("a non-planar cubic graph whose Penrose number reaches F(4)") {
  // All 18 Tait colourings give the two crossing edges different colours.
  const DiskGraph disk = family_generator("T;P1;P3;P2", 4).back().disk;
  const PlanarDiagram d = near_planar_diagram(disk);
  const MultiGraph g = d.underlying_graph();
  CHECK_FALSE(is_planar(g));
  CHECK(d.crossing_count() == 1);
  CHECK(flow_polynomial(g).eval(4) == 18);
  CHECK(penrose_number(d) == -18);
  CHECK(oracle::edge_3_colourings(d.suppress_degree2().underlying_graph()) == 18);
}
