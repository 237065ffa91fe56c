#include "oracles.hpp"

#include <goldenflow/canonical.hpp>
#include <goldenflow/cubic_gen.hpp>
#include <goldenflow/fixtures.hpp>
#include <goldenflow/flow.hpp>
#include <goldenflow/nearplanar.hpp>
#include <goldenflow/planarity.hpp>

#include <doctest.h>

#include <random>

using namespace gf;

namespace {

IntPolynomial Q() { return IntPolynomial::variable(); }

std::array<DiskGraph, 3> basis() { return {disk::p0(), disk::p1(), disk::star()}; }

// Exhaustive flow counting is only affordable on small closures.
IntPolynomial reference_flow(const MultiGraph& g) {
  return g.edge_count() <= 10 ? oracle::flow_polynomial(g) : flow_polynomial(g);
}

std::vector<DiskGraph> random_disks(std::mt19937_64& rng, int count) {
  std::vector<DiskGraph> out;
  const char* tokens[] = {"P1", "P2", "P3", "P4", "T"};
  for (int i = 0; i < count; ++i) {
    std::string moves = (rng() % 2) ? "I" : "H";
    const int len = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < len; ++k) moves += std::string(";") + tokens[rng() % 5];
    auto fam = family_generator(moves, len);
    out.push_back(fam.back().disk);
  }
  return out;
}

}  // namespace

TEST_CASE("disk basics") {
  for (const auto& d : {disk::p0(), disk::p1(), disk::star(), disk::i_graph(), disk::h_graph()}) {
    CHECK(d.boundary().size() == 4);
    CHECK(d.is_plane());
    CHECK(d.crossing_count() == 0);
  }
  CHECK(disk::crossing().crossing_count() == 1);
  CHECK(parse_peripheral("P3") == Peripheral::Top34);
  CHECK_THROWS_AS(parse_peripheral("P5"), std::invalid_argument);
  CHECK(parse_moves("T;H, P1;P3") == std::vector<std::string>{"T", "H", "P1", "P3"});
}

TEST_CASE("gram matrix of the basis") {
  Gram3 g = gram_matrix_c2();
  const auto b = basis();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(g[i][j] == g[j][i]);
      CHECK(g[i][j] == oracle::flow_polynomial(close_disk(b[i], b[j]).underlying_graph()));
    }
  }
  CHECK(g[0][0] == (Q() - 1).pow(2));
  CHECK(g[0][1] == Q() - 1);
  CHECK(g[1][1] == (Q() - 1).pow(2));
  CHECK(g[0][2] == (Q() - 1).pow(2));
  CHECK(g[2][2] == IntPolynomial{-3, 6, -4, 1});
  CHECK(gram_determinant(g) == IntPolynomial{-4, 28, -77, 110, -89, 41, -10, 1});
}

TEST_CASE("expansions of the I and H graphs") {
  const ChromaticVector i = expand_disk_graph(disk::i_graph());
  CHECK(i.alpha.is_zero());
  CHECK(i.beta == IntPolynomial{-1});
  CHECK(i.gamma == IntPolynomial{1});
  const ChromaticVector h = expand_disk_graph(disk::h_graph());
  CHECK(h.alpha == IntPolynomial{-1});
  CHECK(h.beta.is_zero());
  CHECK(h.gamma == IntPolynomial{1});
  CHECK_THROWS_AS(expand_disk_graph(disk::crossing()), std::invalid_argument);
}

TEST_CASE("expansions reproduce every pairing with the basis") {
  std::mt19937_64 rng(61);
  const Gram3 g = gram_matrix_c2();
  const auto b = basis();
  auto disks = random_disks(rng, 25);
  disks.push_back(disk::i_graph());
  disks.push_back(disk::h_graph());
  for (const auto& d : disks) {
    const ChromaticVector v = expand_disk_graph(d);
    CHECK(expand_disk_multigraph(disk_multigraph(d)) == v);
    for (int c = 0; c < 3; ++c) {
      const IntPolynomial direct = reference_flow(close_disk(d, b[c]).underlying_graph());
      CHECK(disk_pairing(d, b[c]) == direct);
      CHECK(pair_with_basis(v, g[c]) == direct);
    }
  }
}

TEST_CASE("one-crossing closure of H with both horizontal edges is K33") {
  const DiskGraph d =
      add_peripheral_edge(add_peripheral_edge(disk::h_graph(), Peripheral::Bottom12), Peripheral::Top34);
  MultiGraph g = near_planar_graph(d);
  CHECK(canonical_key(near_planar_diagram(d).suppress_degree2().underlying_graph()) == canonical_key(fixtures::k33()));
  CHECK(near_planar_diagram(d).crossing_count() == 1);
  CHECK(cubic_edge_count(g) == 9);
  CHECK(cubic_edge_count(near_planar_graph(disk::h_graph())) == 3);
  NearPlanarFlow nf = near_planar_flow(d);
  CHECK(nf.report.passed());
  CHECK(nf.flow == IntPolynomial{20, -42, 30, -9, 1});
  CHECK(nf.flow == oracle::flow_polynomial(fixtures::k33()));
}

TEST_CASE("near-planar flows against direct computation") {
  std::mt19937_64 rng(67);
  for (const auto& d : random_disks(rng, 20)) {
    NearPlanarFlow nf = near_planar_flow(d);
    CHECK(nf.report.passed());
    CHECK(nf.flow == flow_polynomial(near_planar_graph(d)));
    CHECK(near_planar_check(d).passed());
  }
}

TEST_CASE("golden inequality on cubic graphs") {
  for (int n = 4; n <= 10; n += 2) {
    for (const auto& g : generate_cubic_graphs(n, false)) {
      if (!g.is_bridgeless()) continue;
      const bool planar = is_planar(g);
      GoldenInequality gi = golden_inequality(g);
      CHECK(gi.edges == g.edge_count());
      CHECK(golden_sign(gi.conjugate_difference) >= 0);
      CHECK(golden_sign(gi.golden_difference) >= 0);
      if (planar) {
        CHECK(gi.conjugate_difference.is_zero());
        CHECK(gi.golden_difference.is_zero());
      }
      CHECK(inequality_check(g, planar).passed());
    }
  }
  GoldenInequality k33 = golden_inequality(fixtures::k33());
  CHECK(golden_sign(k33.conjugate_difference) > 0);
}

TEST_CASE("peripheral recurrence and sign pattern") {
  // Horizontal positions fix P1 up to (Q - 2); vertical positions swap the roles of P0 and P1.
  auto bottom = peripheral_matrix(Peripheral::Bottom12);
  CHECK(bottom[1].beta == Q() - 2);
  CHECK(bottom[1].alpha.is_zero());
  auto right = peripheral_matrix(Peripheral::Right24);
  CHECK(right[0].alpha == Q() - 2);
  CHECK(right[0].beta.is_zero());
  std::mt19937_64 rng(71);
  for (const auto& d : random_disks(rng, 15)) {
    for (auto p : {Peripheral::Bottom12, Peripheral::Right24, Peripheral::Top34, Peripheral::Left13}) {
      CHECK(recurrence_check(d, p).passed());
    }
    CHECK(sign_pattern_check(d).passed());
    CHECK(yamada_form_check(d).passed());
  }
}

TEST_CASE("basis form of the inequality") {
  // At the H graph, (alpha, beta, gamma) = (-1, 0, 1) gives 1 * (-1 + 0 + 1) - 0 = 0.
  GoldenVector h = evaluate(expand_disk_graph(disk::h_graph()), golden::w());
  CHECK(basis_inequality_difference(h).is_zero());
  GoldenVector v{GoldenNumber(1), GoldenNumber(1), GoldenNumber(0)};
  CHECK(basis_inequality_difference(v) == -(GoldenNumber(1) + GoldenNumber(3) * golden::phi()));
}

TEST_CASE("family generation") {
  auto fam = family_generator("T;P1;P3;P2;P4", 10);
  REQUIRE(fam.size() >= 11);
  CHECK(fam.front().moves == "H");
  int planar = 0;
  for (const auto& m : fam) planar += is_planar(near_planar_graph(m.disk));
  CHECK(planar == 3);
  CHECK(family_check(fam).passed());
  CHECK(family_check(family_generator("H;P1;P3", 6)).passed());
  CHECK(family_check(family_generator("I;P2;P4;P1", 6)).passed());
  CHECK_THROWS_AS(family_generator("Q7", 3), std::invalid_argument);
}
