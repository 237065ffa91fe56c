#include <goldenflow/flow.hpp>
#include <goldenflow/nearplanar.hpp>
#include <goldenflow/planarity.hpp>
#include <goldenflow/ring_json.hpp>
#include <goldenflow/yamada.hpp>

#include <cctype>
#include <stdexcept>

namespace gf {

namespace {

int sign_of(const GoldenNumber& x) { return golden_sign(x); }

IntPolynomial q_var() { return IntPolynomial::variable(); }

// Q^2 - 3Q + 1, whose roots are w and z.
IntPolynomial golden_quadratic() { return IntPolynomial{1, -3, 1}; }

void require_subcubic_bridgeless(const MultiGraph& g) {
  for (int d : g.degrees()) {
    if (d != 2 && d != 3) throw std::invalid_argument("expected vertex degrees 2 and 3");
  }
  if (!g.is_bridgeless()) throw std::invalid_argument("expected a bridgeless graph");
}

}  // namespace

PlanarDiagram near_planar_diagram(const DiskGraph& d) { return close_disk(d, disk::crossing()); }

MultiGraph near_planar_graph(const DiskGraph& d) { return near_planar_diagram(d).underlying_graph(); }

int cubic_edge_count(const MultiGraph& g) {
  int v3 = 0;
  for (int d : g.degrees()) v3 += d == 3;
  return v3 - (g.vertex_count() - g.edge_count());
}

NearPlanarFlow near_planar_flow(const DiskGraph& d) {
  NearPlanarFlow out;
  out.flow = flow_polynomial(near_planar_graph(d));
  IntPolynomial f0 = disk_pairing(disk::p0(), d);
  IntPolynomial f1 = disk_pairing(disk::p1(), d);
  IntPolynomial fs = disk_pairing(disk::star(), d);
  IntPolynomial rhs = -f0 + (q_var() - IntPolynomial(1)) * fs - f1;
  IntPolynomial lhs = golden_quadratic() * out.flow;
  out.report.expect(lhs == rhs, "(Q^2-3Q+1) F = -<P0,D> + (Q-1)<S,D> - <P1,D>", to_json(lhs), to_json(rhs));
  auto quotient = rhs.divide_exact(golden_quadratic());
  out.report.expect(quotient && *quotient == out.flow, "pairing formula reproduces F", to_json(out.flow),
                    quotient ? to_json(*quotient) : Json("not divisible"));
  out.report.note("flow", to_json(out.flow));
  return out;
}

Report golden_nearplanar_identity(const DiskGraph& d) {
  Report r("near-planar golden identity");
  const GoldenNumber phi = golden::phi(), w = golden::w(), z = golden::z();
  MultiGraph g = near_planar_graph(d);
  const int e = cubic_edge_count(g);
  IntPolynomial f = flow_polynomial(g);
  IntPolynomial f0 = disk_pairing(disk::p0(), d);
  IntPolynomial f1 = disk_pairing(disk::p1(), d);
  IntPolynomial fi = disk_pairing(disk::i_graph(), d);

  GoldenNumber f0w = f0.eval_in(w), f1w = f1.eval_in(w);
  GoldenNumber lhs = f.eval_in(z);
  GoldenNumber rhs = (-phi).pow(-e) * (f0w * f0w + phi.inverse() * f0w * f1w + f1w * f1w);
  r.expect(lhs == rhs, "F(z) = (-phi)^-E (F0(w)^2 + phi^-1 F0(w) F1(w) + F1(w)^2)", to_json(lhs), to_json(rhs));

  GoldenNumber half = GoldenNumber(Rational(1, 2), Rational(0));
  GoldenNumber linear = half * phi * f0.eval_in(z) - half * phi.inverse() * fi.eval_in(z) + half * f1.eval_in(z);
  r.expect(lhs == linear, "F(z) = phi/2 F0(z) - phi^-1/2 FI(z) + 1/2 F1(z)", to_json(lhs), to_json(linear));

  GoldenNumber coeff = -golden_quadratic().eval_in(z).inverse();
  r.expect(coeff == half * phi, "-1/(z^2-3z+1) = phi/2", to_json(coeff), to_json(half * phi));
  r.note("edges", e);
  return r;
}

GoldenInequality golden_inequality(const MultiGraph& g) {
  require_subcubic_bridgeless(g);
  const GoldenNumber phi = golden::phi(), w = golden::w(), z = golden::z();
  const GoldenNumber p1 = golden_point(GoldenPoint::PhiPlus1), p2 = golden_point(GoldenPoint::PhiPlus2);
  IntPolynomial f = flow_polynomial(g);
  GoldenInequality out;
  out.edges = cubic_edge_count(g);
  GoldenNumber fw = f.eval_in(w), f1 = f.eval_in(p1);
  out.conjugate_difference = (-phi).pow(out.edges) * f.eval_in(z) - fw * fw;
  out.golden_difference = phi.pow(out.edges) * f1 * f1 - f.eval_in(p2);
  return out;
}

Report inequality_check(const MultiGraph& g, std::optional<bool> planar) {
  Report r("golden inequality");
  GoldenInequality gi = golden_inequality(g);
  int s13 = sign_of(gi.conjugate_difference), s14 = sign_of(gi.golden_difference);
  r.expect(s13 >= 0, "(-phi)^E F(z) >= F(w)^2", to_json(gi.conjugate_difference));
  r.expect(s14 >= 0, "phi^E F(phi+1)^2 >= F(phi+2)", to_json(gi.golden_difference));
  if (planar) {
    r.expect((s13 == 0) == *planar, "conjugate form is an equality exactly for planar graphs", s13, *planar);
    r.expect((s14 == 0) == *planar, "golden form is an equality exactly for planar graphs", s14, *planar);
  }
  r.note("edges", gi.edges);
  r.note("conjugate_difference", to_json(gi.conjugate_difference));
  r.note("golden_difference", to_json(gi.golden_difference));
  r.note("conjugate_sign", s13);
  r.note("golden_sign", s14);
  return r;
}

GoldenNumber basis_inequality_difference(const GoldenVector& v) {
  GoldenNumber c = GoldenNumber(1) + 3 * golden::phi();
  return v.gamma * (v.alpha + v.beta + v.gamma) - c * v.alpha * v.beta;
}

Report yamada_form_check(const DiskGraph& d) {
  Report r("yamada restatement");
  PlanarDiagram over = near_planar_diagram(d);
  PlanarDiagram under = over.crossing_change(over.crossings().at(0));
  CyclotomicNumber ro = yamada_eval_unit_root(over, 4);
  CyclotomicNumber ru = yamada_eval_unit_root(under, 4);
  r.expect(ru == yamada_eval_unit_root(over, -4), "R_under(q) = R_over(1/q) at q = zeta^4", to_json(ru));
  auto product = cyclotomic_to_golden(ro * ru);
  if (!r.expect(product.has_value(), "R_over R_under is real", to_json(ro * ru))) return r;
  GoldenNumber fw = flow_polynomial(over.underlying_graph()).eval_in(golden::w());
  GoldenNumber diff = *product - fw * fw;
  r.expect(sign_of(diff) >= 0, "F(w)^2 <= R_over R_under", to_json(fw * fw), to_json(*product));
  GoldenInequality gi = golden_inequality(over.underlying_graph());
  r.expect(sign_of(diff) == sign_of(gi.conjugate_difference), "verdict matches the conjugate inequality",
           sign_of(diff), sign_of(gi.conjugate_difference));
  r.note("product", to_json(*product));
  return r;
}

std::array<ChromaticVector, 3> peripheral_matrix(Peripheral where) {
  return {expand_disk_graph(add_peripheral_edge(disk::p0(), where)),
          expand_disk_graph(add_peripheral_edge(disk::p1(), where)),
          expand_disk_graph(add_peripheral_edge(disk::star(), where))};
}

namespace {

ChromaticVector apply_matrix(const std::array<ChromaticVector, 3>& m, const ChromaticVector& v) {
  ChromaticVector out;
  const IntPolynomial* c[3] = {&v.alpha, &v.beta, &v.gamma};
  for (int k = 0; k < 3; ++k) {
    out.alpha += *c[k] * m[k].alpha;
    out.beta += *c[k] * m[k].beta;
    out.gamma += *c[k] * m[k].gamma;
  }
  return out;
}

// Closed form at w; vertical positions exchange the roles of alpha and beta.
GoldenVector recurrence_at_w(const GoldenVector& v, Peripheral where) {
  const GoldenNumber phi = golden::phi();
  const GoldenNumber phi2 = phi * phi;
  if (where == Peripheral::Bottom12 || where == Peripheral::Top34) {
    return {-v.alpha, -phi * v.beta + v.gamma, v.alpha - phi2 * v.gamma};
  }
  return {-phi * v.alpha + v.gamma, -v.beta, v.beta - phi2 * v.gamma};
}

Json vector_json(const GoldenVector& v) { return Json::array({to_json(v.alpha), to_json(v.beta), to_json(v.gamma)}); }

void check_step(Report& r, const ChromaticVector& before, const ChromaticVector& after, Peripheral where) {
  ChromaticVector predicted = apply_matrix(peripheral_matrix(where), before);
  r.expect(predicted == after, "position matrix reproduces the expansion");
  GoldenVector at_w = recurrence_at_w(evaluate(before, golden::w()), where);
  GoldenVector direct = evaluate(after, golden::w());
  r.expect(at_w == direct, "closed-form recurrence at w", vector_json(at_w), vector_json(direct));
}

void check_signs(Report& r, const GoldenVector& v, int vertices) {
  if (v.alpha.is_zero() || v.beta.is_zero() || v.gamma.is_zero()) return;
  int s = (vertices / 2) % 2 == 0 ? 1 : -1;
  r.expect(sign_of(v.alpha) == s && sign_of(v.beta) == s && sign_of(v.gamma) == -s,
           "sign(alpha) = sign(beta) = -sign(gamma) = (-1)^(V/2)", vector_json(v), s);
}

}  // namespace

Report recurrence_check(const DiskGraph& d, Peripheral where) {
  Report r("peripheral recurrence");
  check_step(r, expand_disk_graph(d), expand_disk_graph(add_peripheral_edge(d, where)), where);
  return r;
}

Report sign_pattern_check(const DiskGraph& d) {
  Report r("sign pattern");
  check_signs(r, evaluate(expand_disk_graph(d), golden::w()), d.trivalent_count());
  return r;
}

Report near_planar_check(const DiskGraph& d) {
  Report r("near-planar");
  r.absorb(near_planar_flow(d).report);
  MultiGraph g = near_planar_graph(d);
  bool subcubic = true;
  for (int deg : g.degrees()) subcubic = subcubic && (deg == 2 || deg == 3);
  r.note("cubic", subcubic);
  if (!subcubic) return r;  // the golden statements concern cubic graphs only
  r.absorb(golden_nearplanar_identity(d));
  bool planar = is_planar(g);
  Report ineq = inequality_check(g, planar);
  r.absorb(ineq);
  GoldenVector v = evaluate(expand_disk_graph(d), golden::w());
  GoldenNumber basis = basis_inequality_difference(v);
  int direct = ineq.notes()["conjugate_sign"].get<int>();
  r.expect(sign_of(basis) == direct, "basis-coordinate verdict matches the direct verdict", sign_of(basis), direct);
  r.absorb(yamada_form_check(d));
  check_signs(r, v, d.trivalent_count());
  r.note("planar", planar);
  r.note("coordinates_at_w", vector_json(v));
  r.note("conjugate_difference", ineq.notes()["conjugate_difference"]);
  return r;
}

std::vector<std::string> parse_moves(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char c : cur) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    cur.clear();
    if (t.empty()) return;
    if (t != "H" && t != "I" && t != "T" && t != "P1" && t != "P2" && t != "P3" && t != "P4") {
      throw std::invalid_argument("unknown family move '" + t + "'");
    }
    out.push_back(t);
  };
  for (char c : text) {
    if (c == ';' || c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::vector<FamilyMember> family_generator(const std::string& moves, int depth) {
  std::vector<std::string> list = parse_moves(moves);
  std::size_t tail = 0;  // moves after the last seed repeat once the list is exhausted
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == "H" || list[i] == "I") tail = i + 1;
  }
  if (depth > 0 && tail == list.size()) throw std::invalid_argument("family moves need a peripheral edge");
  std::vector<FamilyMember> out{{"H", disk::h_graph(), std::nullopt}};
  int added = 0;
  for (std::size_t i = 0; added < depth; ++i) {
    const std::string& t = i < list.size() ? list[i] : list[tail + (i - list.size()) % (list.size() - tail)];
    FamilyMember next;
    if (t == "H" || t == "I") {
      next = {t, t == "H" ? disk::h_graph() : disk::i_graph(), std::nullopt};
    } else {
      Peripheral p = t == "T" ? Peripheral::Left13 : parse_peripheral(t);
      next = {out.back().moves + ";" + t, add_peripheral_edge(out.back().disk, p), p};
      ++added;
    }
    out.push_back(std::move(next));
  }
  return out;
}

Report family_check(const std::vector<FamilyMember>& members) {
  Report r("peripheral family");
  Json rows = Json::array();
  std::optional<ChromaticVector> prev;
  bool seen_nonplanar = false;
  for (const auto& m : members) {
    if (!m.last) seen_nonplanar = false;
    ChromaticVector ex = expand_disk_graph(m.disk);
    if (m.last && prev) check_step(r, *prev, ex, *m.last);
    MultiGraph g = near_planar_graph(m.disk);
    bool planar = is_planar(g);
    if (seen_nonplanar) r.expect(!planar, "members after a non-planar one stay non-planar", m.moves);
    seen_nonplanar = seen_nonplanar || !planar;

    GoldenInequality gi = golden_inequality(g);
    GoldenVector v = evaluate(ex, golden::w());
    int s13 = sign_of(gi.conjugate_difference), s14 = sign_of(gi.golden_difference);
    int sb = sign_of(basis_inequality_difference(v));
    r.expect(s13 >= 0 && s14 >= 0, "both golden inequalities hold", m.moves);
    r.expect(sb == s13, "basis-coordinate verdict matches the direct verdict", sb, s13);
    r.expect((s13 == 0) == planar, "strict exactly when non-planar", m.moves, planar);
    r.expect((s14 == 0) == planar, "conjugate-point inequality strict exactly when non-planar", m.moves, planar);
    check_signs(r, v, m.disk.trivalent_count());
    rows.push_back({{"moves", m.moves},
                    {"disk_vertices", m.disk.trivalent_count()},
                    {"edges", gi.edges},
                    {"planar", planar},
                    {"strict", s13 > 0},
                    {"coordinates_at_w", vector_json(v)}});
    prev = ex;
  }
  r.note("members", rows);
  return r;
}

}  // namespace gf
