#include <goldenflow/flow.hpp>
#include <goldenflow/ring_json.hpp>
#include <goldenflow/semigroup.hpp>

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace gf {

std::array<GoldenNumber, 2> GoldenMatrix2::apply(const std::array<GoldenNumber, 2>& v) const {
  return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

GoldenMatrix2 operator*(const GoldenMatrix2& x, const GoldenMatrix2& y) {
  GoldenMatrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.m[2 * i + j] = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
  }
  return r;
}

GoldenMatrix2 operator*(const GoldenNumber& s, GoldenMatrix2 x) {
  for (auto& e : x.m) e *= s;
  return x;
}

namespace {

Json matrix_json(const GoldenMatrix2& x) {
  Json j = Json::array();
  for (const auto& e : x.m) j.push_back(to_json(e));
  return j;
}

std::string key(const GoldenNumber& x) { return x.a().str() + "," + x.b().str(); }

std::string key(const GoldenMatrix2& x) {
  std::string s;
  for (const auto& e : x.m) s += key(e) + ";";
  return s;
}

GoldenMatrix2 make(GoldenNumber a, GoldenNumber b, GoldenNumber c, GoldenNumber d) {
  GoldenMatrix2 x;
  x.m = {std::move(a), std::move(b), std::move(c), std::move(d)};
  return x;
}

}  // namespace

SemigroupMatrices matrices() {
  const GoldenNumber p = golden::phi();
  SemigroupMatrices s;
  s.a = (-p) * make(1, 1, 0, p);
  s.b = (-p) * make(p, 0, 1, 1);
  s.a2 = s.a * s.a;
  s.b2 = s.b * s.b;
  return s;
}

Report matrices_check() {
  Report r("generator matrices");
  const GoldenNumber p = golden::phi(), p2 = p * p;
  SemigroupMatrices s = matrices();
  GoldenMatrix2 a2 = p2 * make(1, p2, 0, p2), b2 = p2 * make(p2, 0, p2, 1);
  r.expect(s.a2 == a2, "A^2 = phi^2 [[1, phi^2], [0, phi^2]]", matrix_json(s.a2), matrix_json(a2));
  r.expect(s.b2 == b2, "B^2 = phi^2 [[phi^2, 0], [phi^2, 1]]", matrix_json(s.b2), matrix_json(b2));
  r.expect(s.a.det() == p.pow(3), "det A = phi^3", to_json(s.a.det()));
  r.expect(s.b.det() == p.pow(3), "det B = phi^3", to_json(s.b.det()));
  return r;
}

std::string expand_word(const std::string& word) {
  std::string out;
  for (char c : word) {
    switch (c) {
      case 'A':
      case 'B':
        out += c;
        break;
      case 'a':
        out += "AA";
        break;
      case 'b':
        out += "BB";
        break;
      default:
        throw std::invalid_argument(std::string("word letters are A, B, a, b; got '") + c + "'");
    }
  }
  return out;
}

GoldenMatrix2 word_matrix(const std::string& word) {
  static const SemigroupMatrices s = matrices();
  GoldenMatrix2 x;
  for (char c : expand_word(word)) x = x * (c == 'A' ? s.a : s.b);
  return x;
}

long DistinctCount::max_entry_values() const { return *std::max_element(entry_values.begin(), entry_values.end()); }

DistinctCount distinct_count(int n, int jobs) {
  if (n < 0 || n > 14) throw std::invalid_argument("distinct_count supports 0 <= n <= 14");
  const SemigroupMatrices s = matrices();
  const long total = 1L << n;
  struct Local {
    std::unordered_set<std::string> mats;
    std::array<std::unordered_set<std::string>, 4> entries;
  };
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  std::vector<Local> local(workers);
  auto work = [&](int t) {
    for (long code = t; code < total; code += workers) {
      GoldenMatrix2 x;
      for (int k = 0; k < n; ++k) x = x * ((code >> k) & 1 ? s.b2 : s.a2);
      local[t].mats.insert(key(x));
      for (int e = 0; e < 4; ++e) local[t].entries[e].insert(key(x.m[e]));
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  for (int t = 1; t < workers; ++t) {
    local[0].mats.merge(local[t].mats);
    for (int e = 0; e < 4; ++e) local[0].entries[e].merge(local[t].entries[e]);
  }
  DistinctCount out;
  out.n = n;
  out.words = total;
  out.matrices = static_cast<long>(local[0].mats.size());
  for (int e = 0; e < 4; ++e) out.entry_values[e] = static_cast<long>(local[0].entries[e].size());
  return out;
}

Report free_semigroup_check(int max_n, int jobs) {
  Report r("free semigroup");
  Json rows = Json::array();
  for (int n = 1; n <= max_n; ++n) {
    DistinctCount c = distinct_count(n, jobs);
    r.expect(c.matrices == c.words, "n = " + std::to_string(n) + ": all word matrices distinct", c.matrices, c.words);
    // 2^(n/4) <= v  <=>  n <= 4 log2 v
    long v = c.max_entry_values();
    r.expect(static_cast<double>(n) <= 4.0 * std::log2(static_cast<double>(v)) + 1e-9,
             "n = " + std::to_string(n) + ": entry values >= 2^(n/4)", v, n);
    rows.push_back({{"n", n},
                    {"words", c.words},
                    {"matrices", c.matrices},
                    {"entry_values", Json(c.entry_values)},
                    {"max_entry_values", v}});
  }
  r.note("rows", rows);
  return r;
}

Report ping_pong_certificate(std::uint64_t seed, int samples) {
  Report r("ping pong");
  const SemigroupMatrices s = matrices();
  auto nonneg = [](const GoldenNumber& x) { return golden_sign(x) >= 0; };
  auto positive_form = [&](const GoldenNumber& c1, const GoldenNumber& c2) {
    return nonneg(c1) && nonneg(c2) && (golden_sign(c1) > 0 || golden_sign(c2) > 0);
  };
  const auto& a = s.a2;
  const auto& b = s.b2;
  r.expect(positive_form(a.at(1, 0), a.at(1, 1)), "u2 is a positive form in v", matrix_json(a));
  r.expect(positive_form(a.at(0, 0) - a.at(1, 0), a.at(0, 1) - a.at(1, 1)), "u1 - u2 is a positive form in v");
  r.expect(positive_form(b.at(0, 0), b.at(0, 1)), "w1 is a positive form in v", matrix_json(b));
  r.expect(positive_form(b.at(1, 0) - b.at(0, 0), b.at(1, 1) - b.at(0, 1)), "w2 - w1 is a positive form in v");
  const GoldenNumber p2 = golden::phi().pow(2);
  r.expect(a.at(0, 0) - a.at(1, 0) == p2 && a.at(0, 1) == a.at(1, 1), "u1 - u2 = phi^2 v1");
  r.expect(b.at(1, 1) - b.at(0, 1) == p2 && b.at(1, 0) == b.at(0, 0), "w2 - w1 = phi^2 v2");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(0, 60);
  auto positive = [&] {
    GoldenNumber x;
    do {
      x = GoldenNumber(Rational(coeff(rng), 1 + coeff(rng)), Rational(coeff(rng), 1 + coeff(rng)));
    } while (golden_sign(x) <= 0);
    return x;
  };
  for (int k = 0; k < samples; ++k) {
    std::array<GoldenNumber, 2> v{positive(), positive()};
    auto u = a.apply(v);
    auto w = b.apply(v);
    r.expect(golden_sign(u[0] - u[1]) > 0 && golden_sign(u[1]) > 0, "sample " + std::to_string(k) + ": u1 > u2 > 0");
    r.expect(golden_sign(w[1] - w[0]) > 0 && golden_sign(w[0]) > 0, "sample " + std::to_string(k) + ": 0 < w1 < w2");
  }
  auto edge = a.apply({GoldenNumber(0), GoldenNumber(1)});
  r.note("boundary_v_0_1_gives_u1_equal_u2", edge[0] == edge[1]);
  r.note("seed", seed);
  return r;
}

namespace {

// Grows the graph upwards from the bottom cap: strand ends c[0..2] and the closing arc end.
class WordGraphBuilder {
 public:
  explicit WordGraphBuilder(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("basis index must be 1 or 2");
    bottom_ = g_.add_vertex();
    arc_ = bottom_;
    if (i == 1) {
      c_ = {g_.add_vertex(), g_.add_vertex(), bottom_};
      g_.add_edge(c_[0], c_[1]);
    } else {
      c_ = {bottom_, g_.add_vertex(), g_.add_vertex()};
      g_.add_edge(c_[1], c_[2]);
    }
  }

  void rung(char letter) {
    switch (letter) {
      case 'A':
        join(c_[0], c_[1]);
        break;
      case 'B':
        join(c_[1], c_[2]);
        break;
      case 'C':
        join(c_[2], arc_);
        break;
      default:
        throw std::invalid_argument(std::string("rung letters are A, B, C; got '") + letter + "'");
    }
  }

  MultiGraph cap(char which) {
    switch (which) {
      case '1':
        g_.add_edge(c_[0], c_[1]);
        g_.add_edge(c_[2], arc_);
        break;
      case '2':
        g_.add_edge(c_[1], c_[2]);
        g_.add_edge(c_[0], arc_);
        break;
      case 'X': {
        int x = g_.add_vertex();
        for (int v : {c_[0], c_[1], c_[2], arc_}) g_.add_edge(x, v);
        break;
      }
      default:
        throw std::invalid_argument(std::string("top cap must be 1, 2 or X; got '") + which + "'");
    }
    return g_;
  }

 private:
  void join(int& left, int& right) {
    int u = g_.add_vertex(), v = g_.add_vertex();
    g_.add_edge(left, u);
    g_.add_edge(right, v);
    g_.add_edge(u, v);
    left = u;
    right = v;
  }

  MultiGraph g_;
  int bottom_ = 0;
  int arc_ = 0;
  std::array<int, 3> c_{};
};

}  // namespace

MultiGraph word_graph(const std::string& word, int i, const Completion& top) {
  WordGraphBuilder b(i);
  std::string full = expand_word(word);
  for (auto it = full.rbegin(); it != full.rend(); ++it) b.rung(*it);
  for (auto it = top.rungs.rbegin(); it != top.rungs.rend(); ++it) b.rung(*it);
  return b.cap(top.cap);
}

MultiGraph word_graph(const std::string& word, int i, int j) {
  if (j != 1 && j != 2) throw std::invalid_argument("basis index must be 1 or 2");
  return word_graph(word, i, Completion{"", static_cast<char>('0' + j)});
}

GoldenMatrix2 gram_e(const GoldenNumber& q) {
  GoldenMatrix2 g;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) g.m[2 * (i - 1) + (j - 1)] = flow_polynomial(word_graph("", i, j)).eval_in(q);
  }
  if (g.det().is_zero()) throw std::domain_error("Gram matrix of e1, e2 is singular at this Q");
  return g;
}

GoldenNumber pairing_via_matrices(const std::string& word, int i, int j) {
  if (i < 1 || i > 2 || j < 1 || j > 2) throw std::invalid_argument("basis index must be 1 or 2");
  static const GoldenMatrix2 gram = gram_e(golden::w());
  GoldenMatrix2 m = word_matrix(word);
  return m.at(0, i - 1) * gram.at(0, j - 1) + m.at(1, i - 1) * gram.at(1, j - 1);
}

namespace {

std::vector<std::string> words_of_length(int n, const char* letters = "AB") {
  std::vector<std::string> out;
  for (long code = 0; code < (1L << n); ++code) {
    std::string w;
    for (int k = 0; k < n; ++k) w += letters[(code >> k) & 1];
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

Report crosscheck_words(int n) {
  Report r("matrix pairings against the flow engine");
  const GoldenNumber w = golden::w();
  const GoldenNumber l = w - GoldenNumber(1);
  GoldenMatrix2 gram = gram_e(w);
  r.expect(gram == make(l * l, l, l, l * l), "Gram of e1, e2 = [[(Q-1)^2, Q-1], [Q-1, (Q-1)^2]]", matrix_json(gram));
  long compared = 0;
  auto compare = [&](const std::string& word, int i, int j) {
    GoldenNumber direct = flow_polynomial(word_graph(word, i, j)).eval_in(w);
    GoldenNumber via = pairing_via_matrices(word, i, j);
    ++compared;
    return r.expect(direct == via, "<" + word + " e" + std::to_string(i) + ", e" + std::to_string(j) + ">",
                    to_json(direct), to_json(via));
  };
  for (int len = 0; len <= n; ++len) {
    for (const auto& word : words_of_length(len)) {
      for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) compare(word, i, j);
      }
    }
  }
  compare("AAAABB", 1, 2);
  r.note("pairings_compared", compared);
  r.note("A4B2_e1_e2", to_json(pairing_via_matrices("AAAABB", 1, 2)));
  return r;
}

Report growth_report(const std::vector<int>& letter_counts) {
  Report r("growth of flow values at 2 - phi");
  Json rows = Json::array();
  for (int len : letter_counts) {
    if (len < 0 || len > 16) throw std::invalid_argument("letter counts must lie in [0, 16]");
    std::set<std::string> values;
    for (const auto& word : words_of_length(len)) {
      for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) values.insert(key(pairing_via_matrices(word, i, j)));
      }
    }
    const int vertices = kVerticesPerLetter * len;
    const long distinct = static_cast<long>(values.size());
    r.expect(static_cast<double>(vertices) <= 16.0 * std::log2(static_cast<double>(distinct)) + 1e-9,
             std::to_string(vertices) + " vertices: distinct values >= 2^(n/16)", distinct, vertices);
    rows.push_back({{"letters", len}, {"vertices", vertices}, {"distinct_values", distinct}});
  }
  r.note("vertices_per_letter", kVerticesPerLetter);
  r.note("rows", rows);
  return r;
}

std::vector<Completion> default_completions() {
  std::vector<Completion> out;
  for (char cap : {'1', '2', 'X'}) {
    for (const char* rungs : {"", "A", "B", "C", "AB", "BA", "CA", "BC", "ACB"}) out.push_back({rungs, cap});
  }
  return out;
}

Report q4_action_check(const std::vector<Completion>& completions) {
  Report r("action of A^2, B^2 at Q = 4");
  auto f = [](const std::string& word, int i, const Completion& c) { return flow_polynomial(word_graph(word, i, c)).eval(4); };
  for (const auto& c : completions) {
    BigInt e1 = f("", 1, c), e2 = f("", 2, c);
    const std::string tag = " against " + c.str();
    BigInt x = f("a", 1, c);
    r.expect(x == 4 * e1, "A^2 e1 = 4 e1" + tag, bigint_to_json(x), bigint_to_json(4 * e1));
    x = f("a", 2, c);
    r.expect(x == e1 + e2, "A^2 e2 = e1 + e2" + tag, bigint_to_json(x), bigint_to_json(e1 + e2));
    x = f("b", 1, c);
    r.expect(x == e1 + e2, "B^2 e1 = e1 + e2" + tag, bigint_to_json(x), bigint_to_json(e1 + e2));
    x = f("b", 2, c);
    r.expect(x == 4 * e2, "B^2 e2 = 4 e2" + tag, bigint_to_json(x), bigint_to_json(4 * e2));
  }
  r.note("completions", static_cast<long>(completions.size()));
  return r;
}

}  // namespace gf
