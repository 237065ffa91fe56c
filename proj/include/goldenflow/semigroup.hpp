#pragma once

#include <goldenflow/golden.hpp>
#include <goldenflow/multigraph.hpp>
#include <goldenflow/report.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gf {

/// Row-major [[a, b], [c, d]]. Column k is the image of basis vector e_{k+1}.
struct GoldenMatrix2 {
  std::array<GoldenNumber, 4> m{GoldenNumber(1), GoldenNumber(0), GoldenNumber(0), GoldenNumber(1)};

  const GoldenNumber& at(int r, int c) const { return m[2 * r + c]; }
  GoldenNumber det() const { return m[0] * m[3] - m[1] * m[2]; }
  std::array<GoldenNumber, 2> apply(const std::array<GoldenNumber, 2>& v) const;

  friend GoldenMatrix2 operator*(const GoldenMatrix2& x, const GoldenMatrix2& y);
  friend GoldenMatrix2 operator*(const GoldenNumber& s, GoldenMatrix2 x);
  friend bool operator==(const GoldenMatrix2&, const GoldenMatrix2&) = default;
};

struct SemigroupMatrices {
  GoldenMatrix2 a, b, a2, b2;
};

/// A = -phi [[1,1],[0,phi]], B = -phi [[phi,0],[1,1]] and their squares.
SemigroupMatrices matrices();
/// Squares against their closed forms, and det A = det B = phi^3.
Report matrices_check();

/// Letters A, B, and a = A^2, b = B^2. Returns the word over {A, B}; throws std::invalid_argument.
std::string expand_word(const std::string& word);
/// Product of letter matrices, leftmost letter outermost.
GoldenMatrix2 word_matrix(const std::string& word);

struct DistinctCount {
  int n = 0;
  long words = 0;
  long matrices = 0;
  std::array<long, 4> entry_values{};  // distinct values per matrix position
  long max_entry_values() const;
};

/// All 2^n words of length n in A^2, B^2. Requires 0 <= n <= 14.
DistinctCount distinct_count(int n, int jobs = 1);
/// 2^n distinct matrices and at least 2^(n/4) values of one entry for n = 1..max_n.
Report free_semigroup_check(int max_n, int jobs = 1);

/// A^2 and B^2 map the open positive quadrant into the disjoint cones u1 > u2 > 0 and
/// 0 < w1 < w2. Symbolic on the matrix entries, then randomised spot checks.
Report ping_pong_certificate(std::uint64_t seed, int samples = 200);

/// Material placed above the word before the top cap: rungs over {A, B, C} read like a word
/// (rightmost lowest), where C joins strand 3 to the closing arc. Cap '1' and '2' are the
/// reflected e_1 and e_2; 'X' joins all three strands and the closing arc at one vertex.
struct Completion {
  std::string rungs;
  char cap = '1';
  std::string str() const { return rungs + "|" + cap; }
};

/// Cubic vertices contributed by each A or B letter.
constexpr int kVerticesPerLetter = 2;

/// e_i at the bottom, the word above it (rightmost letter lowest), then the completion, with
/// the bottom point joined to the top by an arc around the right side.
MultiGraph word_graph(const std::string& word, int i, const Completion& top);
MultiGraph word_graph(const std::string& word, int i, int j);

/// <e_i, e_j> from the flow engine at q. Throws std::domain_error when singular.
GoldenMatrix2 gram_e(const GoldenNumber& q);
/// <W e_i, e_j> at Q = 2 - phi through the matrices and gram_e.
GoldenNumber pairing_via_matrices(const std::string& word, int i, int j);

/// Flow engine against the matrix pairing for every word over {A, B} of length <= n and every
/// (i, j), plus the A^4 B^2 instance.
Report crosscheck_words(int n);

/// Distinct F(2 - phi) values among word graphs with 2L cubic vertices, for each L given.
Report growth_report(const std::vector<int>& letter_counts);

/// Completions used by default for the Q = 4 check.
std::vector<Completion> default_completions();
/// A^2 e1 = 4 e1, A^2 e2 = e1 + e2, B^2 e1 = e1 + e2, B^2 e2 = 4 e2 paired with each completion at Q = 4.
Report q4_action_check(const std::vector<Completion>& completions);

}  // namespace gf
