#include "oracles.hpp"

#include <goldenflow/flow.hpp>
#include <goldenflow/semigroup.hpp>

#include <doctest.h>

#include <set>

using namespace gf;

namespace {

GoldenNumber phi() { return golden::phi(); }

GoldenMatrix2 mat(GoldenNumber a, GoldenNumber b, GoldenNumber c, GoldenNumber d) { return {{a, b, c, d}}; }

std::string key(const GoldenMatrix2& m) {
  std::string s;
  for (const auto& x : m.m) s += x.str() + ";";
  return s;
}

int cubic_vertices(const MultiGraph& g) {
  int n = 0;
  for (int d : g.degrees()) n += d == 3;
  return n;
}

}  // namespace

TEST_CASE("generators and their squares") {
  const SemigroupMatrices s = matrices();
  CHECK(s.a == -phi() * mat(1, 1, 0, phi()));
  CHECK(s.b == -phi() * mat(phi(), 0, 1, 1));
  CHECK(s.a2 == s.a * s.a);
  CHECK(s.b2 == s.b * s.b);
  CHECK(s.a.det() == phi().pow(3));
  CHECK(s.b.det() == phi().pow(3));
  CHECK(matrices_check().passed());
  const std::array<GoldenNumber, 2> v{GoldenNumber(2), GoldenNumber(-1)};
  const auto av = s.a.apply(v);
  CHECK(av[0] == s.a.at(0, 0) * 2 - s.a.at(0, 1));
  CHECK(av[1] == s.a.at(1, 0) * 2 - s.a.at(1, 1));
}

TEST_CASE("words") {
  CHECK(expand_word("ab") == "AABB");
  CHECK(expand_word("AbA") == "ABBA");
  CHECK_THROWS_AS(expand_word("AC"), std::invalid_argument);
  const SemigroupMatrices s = matrices();
  CHECK(word_matrix("AB") == s.a * s.b);
  CHECK(word_matrix("aB") == s.a2 * s.b);
  CHECK(word_matrix("") == GoldenMatrix2{});
}

TEST_CASE("distinct products of the squares") {
  const SemigroupMatrices s = matrices();
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> seen;
    std::array<std::set<std::string>, 4> entries;
    for (long bits = 0; bits < (1L << n); ++bits) {
      GoldenMatrix2 m;
      for (int k = 0; k < n; ++k) m = m * ((bits >> k) & 1 ? s.b2 : s.a2);
      seen.insert(key(m));
      for (int e = 0; e < 4; ++e) entries[e].insert(m.m[e].str());
    }
    DistinctCount c = distinct_count(n);
    CHECK(c.words == (1L << n));
    CHECK(c.matrices == static_cast<long>(seen.size()));
    CHECK(c.matrices == (1L << n));
    for (int e = 0; e < 4; ++e) CHECK(c.entry_values[e] == static_cast<long>(entries[e].size()));
  }
  CHECK(distinct_count(10, 2).matrices == distinct_count(10, 1).matrices);
  CHECK(free_semigroup_check(10).passed());
  CHECK_THROWS(distinct_count(15));
}

TEST_CASE("ping-pong certificate") {
  CHECK(ping_pong_certificate(1).passed());
  CHECK(ping_pong_certificate(99, 50).passed());
  // A^2 sends (1, 1) into u1 > u2 > 0 and B^2 into 0 < w1 < w2.
  const SemigroupMatrices s = matrices();
  const auto u = s.a2.apply({GoldenNumber(1), GoldenNumber(1)});
  const auto w = s.b2.apply({GoldenNumber(1), GoldenNumber(1)});
  CHECK(golden_sign(u[0] - u[1]) > 0);
  CHECK(golden_sign(u[1]) > 0);
  CHECK(golden_sign(w[1] - w[0]) > 0);
  CHECK(golden_sign(w[0]) > 0);
}

TEST_CASE("word graphs against the matrix representation") {
  const GoldenNumber q = GoldenNumber(2) - phi();
  const GoldenMatrix2 g = gram_e(q);
  CHECK(g == mat((q - 1).pow(2), q - 1, q - 1, (q - 1).pow(2)));
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      CHECK(flow_polynomial(word_graph("", i, j)).eval_in(q) == g.at(i - 1, j - 1));
    }
  }
  for (const char* w : {"A", "B", "AB", "BA", "AAB", "ABBA", "BBAB"}) {
    CAPTURE(w);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        MultiGraph gr = word_graph(w, i, j);
        CHECK(flow_polynomial(gr).eval_in(q) == pairing_via_matrices(w, i, j));
        // The closed graph is small enough for exhaustive flow counting.
        if (gr.edge_count() <= 10) CHECK(flow_polynomial(gr) == oracle::flow_polynomial(gr));
      }
    }
  }
  CHECK(pairing_via_matrices("AAAABB", 1, 2) == GoldenNumber(Rational(-50), Rational(-81)));
  CHECK(crosscheck_words(4).passed());
}

TEST_CASE("each letter adds two cubic vertices") {
  const int base = cubic_vertices(word_graph("", 1, 2));
  for (const char* w : {"A", "AB", "ABA", "BBAB", "AAAABB"}) {
    CHECK(cubic_vertices(word_graph(w, 1, 2)) == base + kVerticesPerLetter * static_cast<int>(std::string(w).size()));
  }
}

TEST_CASE("growth and the Q = 4 action") {
  CHECK(growth_report({1, 2, 3}).passed());
  auto completions = default_completions();
  CHECK(completions.size() == 27);
  CHECK(q4_action_check(completions).passed());
  CHECK(Completion{"AC", 'X'}.str() == "AC|X");
}
