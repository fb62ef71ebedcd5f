#include "qmono/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmono/classifier.hpp"
#include "qmono/errors.hpp"
#include "qmono/homology.hpp"
#include "qmono/orbits.hpp"
#include "qmono/selftest.hpp"

namespace qmono {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double tolerance_from_env() {
  const char* raw = std::getenv("QMONO_TOL");
  if (!raw || !*raw) return kDefaultTol;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (*end != '\0' || !(tol > 0.0)) {
    throw UsageError("QMONO_TOL must be a positive number");
  }
  return tol;
}

LatticePoint parse_point(const std::string& text) {
  std::istringstream is(text);
  LatticePoint x;
  char comma = 0;
  if (!(is >> x.u >> comma >> x.v) || comma != ',' || !(is >> std::ws).eof()) {
    throw UsageError("--start expects u,v");
  }
  return x;
}

json point_json(const LatticePoint& x) { return json::array({x.u, x.v}); }

json points_json(const std::vector<LatticePoint>& pts) {
  json a = json::array();
  for (const auto& x : pts) a.push_back(point_json(x));
  return a;
}

std::string points_text(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) return "none";
  std::string s;
  for (const auto& x : pts) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(x.u) + "," + std::to_string(x.v) + ")";
  }
  return s;
}

json matrix_json(const MonodromyMatrix& m) {
  return json::array({json::array({m.m11, m.m12}), json::array({m.m21, m.m22})});
}

json ranks_json(const RankMap& m) {
  json o = json::object();
  for (const auto& [deg, rank] : m) o[std::to_string(deg)] = rank;
  return o;
}

std::string ranks_text(const RankMap& m) {
  if (m.empty()) return "{}";
  std::string s = "{";
  for (const auto& [deg, rank] : m) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(deg) + ": " + std::to_string(rank);
  }
  return s + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  bool as_json = false;
  int n = 0;
  std::vector<std::string> words;
  std::string start = "1,0";
  int radius = 8;
  int max_word_len = 12;
  std::string loop_path;
  std::string kind;
  double eps = 0.25;
  int samples = 256;
  std::string output;
};

void emit(std::ostream& out, bool as_json, const json& j,
          const std::string& text) {
  if (as_json) {
    out << j.dump() << '\n';
  } else {
    out << text;
  }
}

void word_command(std::ostream& out, bool as_json, const GroupWord& g) {
  const std::string w = format_word(g);
  emit(out, as_json, {{"word", w}}, w + "\n");
}

void rep_command(std::ostream& out, const Options& o) {
  const Parity p = parity_of(o.n);
  const GroupWord g = parse_word(o.words.at(0));
  const MonodromyMatrix m = matrix_of(g, p);
  const json j = {{"word", format_word(g)},
                  {"n", o.n},
                  {"parity", parity_name(p)},
                  {"matrix", matrix_json(m)},
                  {"det", m.det()},
                  {"quotient_character", quotient_character(g, p)}};
  std::ostringstream t;
  t << "word: " << format_word(g) << "\nparity: " << parity_name(p)
    << "\nmatrix: " << format_matrix(m) << "\ndet: " << m.det()
    << "\nquotient_character: " << quotient_character(g, p) << "\n";
  emit(out, o.as_json, j, t.str());
}

void orbit_command(std::ostream& out, const Options& o) {
  const Parity p = parity_of(o.n);
  const LatticePoint start = parse_point(o.start);
  json j = {{"start", point_json(start)},
            {"n", o.n},
            {"parity", parity_name(p)},
            {"max_word_len", o.max_word_len},
            {"box_radius", o.radius}};
  std::ostringstream t;
  t << "start: " << points_text({start}) << "\nparity: " << parity_name(p)
    << "\nmax_word_len: " << o.max_word_len << "\nbox_radius: " << o.radius
    << "\n";
  if (p == Parity::Odd) {
    // The lattice claim is an even-dimension statement; report the orbit only.
    const auto reached = orbit_bfs(start, p, o.max_word_len);
    j["reached"] = points_json(reached);
    j["claim"] = nullptr;
    t << "reached: " << points_text(reached) << "\nclaim: not applicable\n";
  } else {
    const OrbitReport r = verify_orbit_claim(o.radius, o.max_word_len, p, start);
    j["reached"] = points_json(r.reached);
    j["claimed"] = points_json(r.claimed);
    j["missing"] = points_json(r.missing);
    j["extraneous"] = points_json(r.extraneous);
    j["claim_holds"] = r.missing.empty() && r.extraneous.empty();
    t << "reached: " << points_text(r.reached)
      << "\nclaimed: " << r.claimed.size() << " points"
      << "\nmissing: " << points_text(r.missing)
      << "\nextraneous: " << points_text(r.extraneous)
      << "\nclaim_holds: "
      << (r.missing.empty() && r.extraneous.empty() ? "true" : "false") << "\n";
  }
  emit(out, o.as_json, j, t.str());
}

void classify_command(std::ostream& out, const Options& o, double tol) {
  HyperplaneLoop loop = loop_from_json(read_file(o.loop_path));
  if (o.n != 0) {
    if (loop.n != 0 && loop.n != o.n && !loop.samples.empty()) {
      throw Error(ErrorKind::MalformedLoop,
                  "--n disagrees with the loop file's n");
    }
    loop.n = o.n;
  }
  const ClassificationResult r = classify(loop, tol);
  const auto& d = r.diagnostics;
  const json j = {{"word", format_word(r.word)},
                  {"matrix_even", matrix_json(r.matrix_even)},
                  {"matrix_odd", matrix_json(r.matrix_odd)},
                  {"diagnostics",
                   {{"min_margin", d.min_margin},
                    {"max_relative_step", d.max_relative_step},
                    {"crossing_count", d.crossing_count},
                    {"q_winding", d.q_winding},
                    {"winding_parity", d.winding_parity}}}};
  std::ostringstream t;
  t << "word: " << format_word(r.word)
    << "\nmatrix_even: " << format_matrix(r.matrix_even)
    << "\nmatrix_odd: " << format_matrix(r.matrix_odd)
    << "\nmin_margin: " << d.min_margin
    << "\nmax_relative_step: " << d.max_relative_step
    << "\ncrossing_count: " << d.crossing_count
    << "\nq_winding: " << d.q_winding
    << "\nwinding_parity: " << d.winding_parity << "\n";
  emit(out, o.as_json, j, t.str());
}

void homology_command(std::ostream& out, const Options& o) {
  const HomologyTable h = homology_table(o.n);
  const json j = {{"n", h.n},
                  {"relative", ranks_json(h.relative)},
                  {"absolute_reduced", ranks_json(h.absolute)},
                  {"quadric", ranks_json(h.quadric)},
                  {"hyperplane", ranks_json(h.hyperplane)},
                  {"intersection", ranks_json(h.intersection)}};
  std::ostringstream t;
  t << "n: " << h.n << "\nrelative H_i(C^n, A u L): " << ranks_text(h.relative)
    << "\nreduced H_i(A u L): " << ranks_text(h.absolute)
    << "\nH_i(A): " << ranks_text(h.quadric)
    << "\nH_i(L): " << ranks_text(h.hyperplane)
    << "\nH_i(A n L): " << ranks_text(h.intersection) << "\n";
  emit(out, o.as_json, j, t.str());
}

bool selftest_command(std::ostream& out, bool as_json) {
  const auto checks = run_selftest();
  bool ok = true;
  json arr = json::array();
  std::ostringstream t;
  for (const auto& c : checks) {
    ok = ok && c.ok;
    arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    t << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  emit(out, as_json, {{"checks", arr}, {"ok", ok}}, t.str());
  return ok;
}

void make_loop_command(std::ostream& out, const Options& o) {
  HyperplaneLoop l;
  if (o.kind == "alpha") {
    l = make_alpha_loop(o.n, o.eps, o.samples);
  } else if (o.kind == "beta") {
    l = make_beta_loop(o.n, o.eps, o.samples);
  } else if (o.kind == "kappa") {
    l = make_kappa_loop(o.n, o.samples);
  } else {
    l = make_constant_loop(o.n, o.samples);
  }
  const std::string text = loop_to_json(l);
  if (o.output.empty() || o.output == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw UsageError("cannot write " + o.output);
  f << text << '\n';
  if (!f) throw UsageError("cannot write " + o.output);
  emit(out, o.as_json, {{"written", o.output}, {"samples", l.samples.size()}},
       "wrote " + std::to_string(l.samples.size()) + " samples to " +
           o.output + "\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Monodromy of hyperplanes in general position to a quadric",
               "qmono"};
  app.require_subcommand(1);
  app.add_flag("--json", o.as_json, "Machine-readable output");

  auto* normalize_cmd = app.add_subcommand("normalize", "Normal form of a word");
  normalize_cmd->add_option("word", o.words, "Word over a, b, k")->expected(1)->required();

  auto* multiply_cmd = app.add_subcommand("multiply", "Product of two words");
  multiply_cmd->add_option("words", o.words, "Two words")->expected(2)->required();

  auto* invert_cmd = app.add_subcommand("invert", "Inverse of a word");
  invert_cmd->add_option("word", o.words, "Word")->expected(1)->required();

  auto* rep_cmd = app.add_subcommand("rep", "Monodromy matrix of a word");
  rep_cmd->add_option("--n", o.n, "Ambient dimension")->required()->check(CLI::Range(2, 1 << 30));
  rep_cmd->add_option("word", o.words, "Word")->expected(1)->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Bounded orbit of a lattice point");
  orbit_cmd->add_option("--n", o.n, "Ambient dimension")->required()->check(CLI::Range(2, 1 << 30));
  orbit_cmd->add_option("--start", o.start, "Start point u,v");
  orbit_cmd->add_option("--radius", o.radius, "Box radius")->check(CLI::PositiveNumber);
  orbit_cmd->add_option("--max-word-len", o.max_word_len, "Maximum number of steps")
      ->check(CLI::NonNegativeNumber);

  auto* classify_cmd = app.add_subcommand("classify", "Classify a loop file");
  classify_cmd->add_option("--n", o.n, "Ambient dimension (overrides the file)");
  classify_cmd->add_option("loop", o.loop_path, "Loop JSON file")->required();

  auto* homology_cmd = app.add_subcommand("homology", "Homology ranks of (C^n, A u L)");
  homology_cmd->add_option("--n", o.n, "Ambient dimension")->required()->check(CLI::Range(2, 1 << 30));

  auto* selftest_cmd = app.add_subcommand("selftest", "Built-in consistency checks");

  auto* make_loop_cmd = app.add_subcommand("make-loop", "Write a fixture loop");
  make_loop_cmd->add_option("--kind", o.kind, "alpha, beta, kappa or constant")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "kappa", "constant"}));
  make_loop_cmd->add_option("--n", o.n, "Ambient dimension")->required();
  make_loop_cmd->add_option("--eps", o.eps, "Circle radius for alpha/beta");
  make_loop_cmd->add_option("--samples", o.samples, "Number of segments");
  make_loop_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    const double tol = tolerance_from_env();
    if (normalize_cmd->parsed()) {
      word_command(out, o.as_json, parse_word(o.words.at(0)));
    } else if (multiply_cmd->parsed()) {
      word_command(out, o.as_json,
                   multiply(parse_word(o.words.at(0)), parse_word(o.words.at(1))));
    } else if (invert_cmd->parsed()) {
      word_command(out, o.as_json, invert(parse_word(o.words.at(0))));
    } else if (rep_cmd->parsed()) {
      rep_command(out, o);
    } else if (orbit_cmd->parsed()) {
      orbit_command(out, o);
    } else if (classify_cmd->parsed()) {
      classify_command(out, o, tol);
    } else if (homology_cmd->parsed()) {
      homology_command(out, o);
    } else if (selftest_cmd->parsed()) {
      return selftest_command(out, o.as_json) ? 0 : 1;
    } else if (make_loop_cmd->parsed()) {
      make_loop_command(out, o);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (o.as_json) {
      out << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qmono
