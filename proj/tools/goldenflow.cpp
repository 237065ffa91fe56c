#include <goldenflow/cache_io.hpp>
#include <goldenflow/cubic_gen.hpp>
#include <goldenflow/diagram_build.hpp>
#include <goldenflow/fixtures.hpp>
#include <goldenflow/flow.hpp>
#include <goldenflow/graph6.hpp>
#include <goldenflow/identities.hpp>
#include <goldenflow/nearplanar.hpp>
#include <goldenflow/planarity.hpp>
#include <goldenflow/ring_json.hpp>
#include <goldenflow/semigroup.hpp>
#include <goldenflow/yamada.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace gf;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string cache;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
};

template <class T>
struct Named {
  std::string label;
  T value;
};

// ---------------------------------------------------------------- input

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

bool is_fixture(const std::string& name) {
  for (const auto& n : fixtures::names()) {
    if (n == name) return true;
  }
  return false;
}

std::string graph_label(const MultiGraph& g) { return g.is_simple() ? write_graph6(g) : write_sparse6(g); }

std::vector<Named<MultiGraph>> read_graphs(const std::string& arg) {
  std::vector<Named<MultiGraph>> out;
  auto parse_all = [&](const std::vector<std::string>& lines, const std::string& source) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      try {
        out.push_back({lines[i], parse_graph_line(lines[i])});
      } catch (const ParseError& e) {
        throw UsageError(source + " line " + std::to_string(i + 1) + ": " + e.what());
      }
    }
  };
  if (arg == "-") {
    parse_all(read_lines(std::cin), "stdin");
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    parse_all(read_lines(in), arg);
  } else if (is_fixture(arg)) {
    out.push_back({arg, fixtures::by_name(arg)});
  } else {
    parse_all({arg}, "argument");
  }
  if (out.empty()) throw UsageError("no graphs in input " + arg);
  return out;
}

std::vector<Named<MultiGraph>> generated_cubic(int max_vertices, bool planar_only) {
  if (max_vertices < 4 || max_vertices > 16) throw UsageError("--generate expects 4 <= N <= 16");
  std::vector<Named<MultiGraph>> out;
  for (int n = 4; n <= max_vertices; n += 2) {
    for (auto& g : generate_cubic_graphs(n, false)) {
      if (planar_only && !is_planar(g)) continue;
      out.push_back({graph_label(g), std::move(g)});
    }
  }
  return out;
}

DiskGraph disk_from_moves(const std::string& text) {
  if (text == "P0") return disk::p0();
  if (text == "P1") return disk::p1();
  if (text == "S") return disk::star();
  if (text == "I") return disk::i_graph();
  if (text == "H") return disk::h_graph();
  int peripheral = 0;
  for (const auto& t : parse_moves(text)) {
    if (t != "H" && t != "I") ++peripheral;
  }
  auto members = family_generator(text, peripheral);
  return members.back().disk;
}

PlanarDiagram builtin_diagram(const std::string& name) {
  if (name == "hopf") return braid_closure(2, {1, 1});
  if (name == "trefoil") return braid_closure(2, {1, 1, 1});
  if (name == "kinked") return kinked_circle();
  if (name == "k33") return near_planar_diagram(disk_from_moves("H;P1;P3"));
  if (name == "knotted-theta") return chord_diagrams(braid_closure(2, {1, 1, 1})).front();
  if (is_fixture(name)) {
    MultiGraph g = fixtures::by_name(name);
    if (auto d = planar_diagram(g)) return *d;
    return circle_diagram(g);
  }
  throw UsageError("unknown diagram " + name);
}

const char* const kBuiltinDiagrams[] = {"hopf", "trefoil", "kinked", "k33", "knotted-theta"};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

bool is_json_file(const std::string& arg) {
  return std::filesystem::is_regular_file(arg) && std::filesystem::path(arg).extension() == ".json";
}

// Diagram files and named knots; graph fixtures and graph6 input stay graphs.
bool is_diagram_input(const std::string& arg) {
  if (is_json_file(arg)) return true;
  for (const char* b : kBuiltinDiagrams) {
    if (arg == b) return true;
  }
  return false;
}

std::vector<Named<PlanarDiagram>> read_diagrams(const std::string& arg) {
  std::vector<Named<PlanarDiagram>> out;
  if (!is_json_file(arg)) {
    out.push_back({arg, builtin_diagram(arg)});
    return out;
  }
  Json j = read_json_file(arg);
  auto one = [&](const Json& x, const std::string& label) {
    try {
      out.push_back({label, PlanarDiagram::from_json(x)});
    } catch (const std::exception& e) {
      throw UsageError(label + ": " + e.what());
    }
  };
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) one(j[i], arg + "#" + std::to_string(i));
  } else {
    one(j, arg);
  }
  return out;
}

std::vector<Named<DiskGraph>> read_disks(const std::string& arg) {
  std::vector<Named<DiskGraph>> out;
  if (is_json_file(arg)) {
    for (auto& d : read_diagrams(arg)) {
      if (d.value.boundary().size() != 4) throw UsageError(d.label + ": a disk graph needs four boundary nodes");
      out.push_back(std::move(d));
    }
  } else {
    out.push_back({arg, disk_from_moves(arg)});
  }
  return out;
}

// ---------------------------------------------------------------- output

struct Outcome {
  bool failed = false;
  void report(const Report& r, const std::string& input = "") {
    Json j = r.to_json();
    if (!input.empty()) j["input"] = input;
    std::cout << j.dump() << "\n";
    std::cerr << r.name() << (input.empty() ? "" : " [" + input + "]") << ": " << r.checks() << " checks, "
              << r.failures().size() << " failures\n";
    failed = failed || !r.passed();
  }
  int code() const { return failed ? 1 : 0; }
};

Json eval_int_or_golden(const IntPolynomial& p, const std::string& at) {
  for (GoldenPoint gp : {GoldenPoint::W, GoldenPoint::Z, GoldenPoint::PhiPlus1, GoldenPoint::PhiPlus2}) {
    if (at == golden_point_name(gp)) return to_json(p.eval_in(golden_point(gp)));
  }
  try {
    std::size_t used = 0;
    long x = std::stol(at, &used);
    if (used == at.size()) return bigint_to_json(p.eval(x));
  } catch (const std::exception&) {
  }
  throw UsageError("--eval expects w, z, phi1, phi2 or an integer; got " + at);
}

// ---------------------------------------------------------------- commands

int cmd_polynomial(const Globals& gl, const std::string& input, const std::vector<std::string>& evals, bool chromatic) {
  FlowOptions options;
  options.cache = &default_flow_cache();
  options.random_seed = gl.seed;
  for (const auto& g : read_graphs(input)) {
    IntPolynomial p = chromatic ? chromatic_polynomial(g.value) : flow_polynomial(g.value, options);
    Json j = {{"input", g.label},
              {"vertices", g.value.vertex_count()},
              {"edges", g.value.edge_count()},
              {chromatic ? "chromatic" : "flow", to_json(p)}};
    if (!evals.empty()) {
      Json e = Json::object();
      for (const auto& at : evals) e[at] = eval_int_or_golden(p, at);
      j["evaluations"] = e;
    }
    std::cout << j.dump() << "\n";
  }
  return 0;
}

int cmd_yamada(const Globals& gl, const std::string& input, const std::vector<std::string>& evals) {
  YamadaOptions options;
  options.cache = &default_yamada_cache();
  options.random_seed = gl.seed;
  for (const auto& d : read_diagrams(input)) {
    LaurentPolynomial p = yamada_polynomial(d.value, options);
    Json j = {{"input", d.label}, {"crossings", d.value.crossing_count()}, {"yamada", to_json(p)}};
    if (!evals.empty()) {
      Json e = Json::object();
      for (const auto& at : evals) {
        if (at == "1" || at == "-1") {
          e[at] = bigint_to_json(p.eval_int(std::stol(at)));
        } else if (at.rfind("zeta:", 0) == 0) {
          long k = 0;
          try {
            k = std::stol(at.substr(5));
          } catch (const std::exception&) {
            throw UsageError("--eval zeta:k needs an integer k");
          }
          e[at] = to_json(eval_laurent_at_unit_root(p, k));
        } else {
          throw UsageError("--eval expects zeta:k, 1 or -1; got " + at);
        }
      }
      j["evaluations"] = e;
    }
    std::cout << j.dump() << "\n";
  }
  return 0;
}

std::vector<DiskGraph> default_completions_disks() {
  std::vector<DiskGraph> out{disk::p0(), disk::p1(), disk::star(), disk::i_graph(), disk::h_graph()};
  for (const auto& m : family_generator("T;P1;P3;P2;P4", 6)) out.push_back(m.disk);
  return out;
}

int cmd_verify(const Globals& gl, const std::string& kind, std::vector<std::string> inputs, int generate) {
  Outcome out;
  auto graphs = [&](bool planar_only) {
    std::vector<Named<MultiGraph>> all;
    if (generate > 0) all = generated_cubic(generate, planar_only);
    for (const auto& in : inputs) {
      for (auto& g : read_graphs(in)) all.push_back(std::move(g));
    }
    if (all.empty()) throw UsageError("verify " + kind + " needs an input or --generate N");
    return all;
  };
  auto need_input = [&] {
    if (inputs.empty()) throw UsageError("verify " + kind + " needs an input");
  };

  if (kind == "golden") {
    long skipped = 0;
    for (const auto& g : graphs(generate > 0)) {
      if (!g.value.is_cubic() || !g.value.is_bridgeless()) {
        ++skipped;
        continue;
      }
      if (auto d = planar_diagram(g.value)) {
        out.report(check_golden_planar(g.value, *d), g.label);
      } else {
        out.report(inequality_check(g.value, false), g.label);
      }
    }
    if (skipped > 0) std::cerr << skipped << " inputs skipped (not cubic or not bridgeless)\n";
  } else if (kind == "yamada-golden") {
    need_input();
    for (const auto& in : inputs) {
      for (const auto& d : read_diagrams(in)) out.report(check_golden_yamada(d.value), d.label);
    }
  } else if (kind == "mod5") {
    std::vector<std::string> graph_inputs;
    for (const auto& in : inputs) {
      if (!is_diagram_input(in)) {
        graph_inputs.push_back(in);
        continue;
      }
      for (const auto& d : read_diagrams(in)) out.report(check_mod5(d.value), d.label);
    }
    if (!graph_inputs.empty() || generate > 0) {
      inputs = graph_inputs;
      for (const auto& g : graphs(false)) {
        out.report(check_mod5(g.value), g.label);
        if (auto d = planar_diagram(g.value)) out.report(check_mod5(*d), g.label);
      }
    }
  } else if (kind == "thm12") {
    std::vector<MultiGraph> corpus;
    for (auto& g : graphs(false)) corpus.push_back(std::move(g.value));
    out.report(residue_scan(corpus, gl.jobs));
  } else if (kind == "appendix") {
    need_input();
    for (const auto& in : inputs) {
      for (const auto& d : read_disks(in)) out.report(check_appendix(d.value), d.label);
    }
    out.report(check_appendix_dependency());
    out.report(check_appendix_unnormalized_dependency());
    out.report(check_loop_values());
  } else if (kind == "linear-relations") {
    std::vector<DiskGraph> completions;
    for (const auto& in : inputs) {
      for (auto& d : read_disks(in)) completions.push_back(std::move(d.value));
    }
    if (completions.empty()) completions = default_completions_disks();
    out.report(check_linear_relation(GoldenPoint::PhiPlus1, completions));
    out.report(check_linear_relation(GoldenPoint::W, completions));
    out.report(check_skein_coefficients());
  } else if (kind == "prop53") {
    need_input();
    for (const auto& in : inputs) {
      for (const auto& d : read_disks(in)) out.report(near_planar_flow(d.value).report, d.label);
    }
  } else if (kind == "lemma52") {
    need_input();
    for (const auto& in : inputs) {
      for (const auto& d : read_disks(in)) out.report(golden_nearplanar_identity(d.value), d.label);
    }
  } else {
    throw UsageError("unknown verify target " + kind);
  }
  return out.code();
}

int cmd_snark(const std::string& input) {
  Outcome out;
  for (const auto& g : read_graphs(input)) {
    bool snark = is_snark(g.value);
    std::cout << Json{{"input", g.label}, {"snark", snark}}.dump() << "\n";
    if (snark) out.report(snark_checks(g.value), g.label);
  }
  return out.code();
}

int cmd_oracle(const std::string& input) {
  Report r("oracle comparison");
  for (const auto& g : read_graphs(input)) {
    IntPolynomial a = flow_polynomial(g.value), b = flow_from_oracle(g.value);
    r.expect(a == b, g.label, to_json(a), to_json(b));
  }
  Outcome out;
  out.report(r);
  return out.code();
}

int cmd_semigroup_count(int n, int jobs) {
  if (n < 1 || n > 14) throw UsageError("semigroup count expects 1 <= n <= 14");
  bool ok = true;
  std::cout << "n,words,matrices,entry_values_max,entry_values_min_required\n";
  for (int k = 1; k <= n; ++k) {
    DistinctCount c = distinct_count(k, jobs);
    long need = static_cast<long>(std::ceil(std::pow(2.0, k / 4.0) - 1e-9));
    ok = ok && c.matrices == c.words && c.max_entry_values() >= need;
    std::cout << k << "," << c.words << "," << c.matrices << "," << c.max_entry_values() << "," << need << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flow, chromatic and Yamada polynomials with exact golden-ratio identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--cache", gl.cache, "JSON-lines file persisting flow polynomials");
  app.add_option("--jobs", gl.jobs, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", gl.seed, "seed for randomised orders and samples");

  std::string input;
  std::vector<std::string> evals;
  auto* flow = app.add_subcommand("flow", "flow polynomial of each input graph");
  flow->add_option("input", input, "graph6/sparse6 string, file, '-' or fixture name")->required();
  flow->add_option("--eval", evals, "w, z, phi1, phi2 or an integer");
  auto* chrom = app.add_subcommand("chromatic", "chromatic polynomial of each input graph");
  chrom->add_option("input", input)->required();
  chrom->add_option("--eval", evals);
  auto* yam = app.add_subcommand("yamada", "Yamada polynomial of each input diagram");
  yam->add_option("input", input, "diagram JSON file or builtin name")->required();
  yam->add_option("--eval", evals, "zeta:k, 1 or -1");

  std::string kind;
  std::vector<std::string> inputs;
  int generate = 0;
  auto* verify = app.add_subcommand("verify", "identity checks with pass/fail reports");
  verify->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"golden", "yamada-golden", "mod5", "thm12", "appendix", "linear-relations", "prop53",
                             "lemma52"}));
  verify->add_option("inputs", inputs);
  verify->add_option("--generate", generate, "all connected simple cubic graphs up to N vertices");

  auto* snark = app.add_subcommand("snark", "snark detection and divisibility checks");
  snark->add_option("input", input)->required();

  auto* np = app.add_subcommand("nearplanar", "one-crossing graphs from disk graphs");
  np->require_subcommand(1);
  auto* np_check = np->add_subcommand("check", "all single-disk checks");
  np_check->add_option("disk", input, "disk JSON file, P0/P1/S/I/H or a move list")->required();
  std::string moves = "T;P1;P3;P2;P4";
  int depth = 10;
  auto* np_family = np->add_subcommand("family", "inequality verdicts along a peripheral-edge family");
  np_family->add_option("--moves", moves);
  np_family->add_option("--depth", depth)->check(CLI::Range(0, 40));

  int n = 12;
  auto* sg = app.add_subcommand("semigroup", "golden matrices A, B and word graphs");
  sg->require_subcommand(1);
  auto* sg_count = sg->add_subcommand("count", "distinct word matrices per length, as CSV");
  sg_count->add_option("-n", n);
  auto* sg_cross = sg->add_subcommand("crosscheck", "matrix pairings against the flow engine");
  sg_cross->add_option("-n", n)->check(CLI::Range(0, 8));
  int growth_max = 12;
  auto* sg_growth = sg->add_subcommand("growth", "distinct flow values per vertex count");
  sg_growth->add_option("--max-letters", growth_max)->check(CLI::Range(1, 16));
  auto* sg_q4 = sg->add_subcommand("q4", "action of A^2, B^2 at Q = 4");
  auto* sg_pp = sg->add_subcommand("pingpong", "ping-pong certificate for A^2, B^2");

  auto* oracle = app.add_subcommand("oracle", "engine against independent oracles");
  oracle->require_subcommand(1);
  auto* oracle_cmp = oracle->add_subcommand("compare", "contraction-deletion against flow counting");
  oracle_cmp->add_option("input", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!gl.cache.empty()) load_cache(gl.cache, default_flow_cache());
    int code = 0;
    if (*flow) {
      code = cmd_polynomial(gl, input, evals, false);
    } else if (*chrom) {
      code = cmd_polynomial(gl, input, evals, true);
    } else if (*yam) {
      code = cmd_yamada(gl, input, evals);
    } else if (*verify) {
      code = cmd_verify(gl, kind, inputs, generate);
    } else if (*snark) {
      code = cmd_snark(input);
    } else if (*np_check) {
      Outcome out;
      for (const auto& d : read_disks(input)) out.report(near_planar_check(d.value), d.label);
      code = out.code();
    } else if (*np_family) {
      Outcome out;
      out.report(family_check(family_generator(moves, depth)), moves);
      code = out.code();
    } else if (*sg_count) {
      code = cmd_semigroup_count(n, gl.jobs);
    } else if (*sg_cross) {
      Outcome out;
      out.report(crosscheck_words(n));
      code = out.code();
    } else if (*sg_growth) {
      std::vector<int> lengths;
      for (int k = 1; k <= growth_max; ++k) lengths.push_back(k);
      Outcome out;
      out.report(growth_report(lengths));
      code = out.code();
    } else if (*sg_q4) {
      Outcome out;
      out.report(q4_action_check(default_completions()));
      code = out.code();
    } else if (*sg_pp) {
      Outcome out;
      out.report(matrices_check());
      out.report(ping_pong_certificate(gl.seed.value_or(1)));
      code = out.code();
    } else if (*oracle_cmp) {
      code = cmd_oracle(input);
    }
    if (!gl.cache.empty()) save_cache(gl.cache, default_flow_cache());
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
