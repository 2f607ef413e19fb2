#include "szlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "szlab/dual_tree.hpp"
#include "szlab/error.hpp"
#include "szlab/json_io.hpp"
#include "szlab/ordinal_measure.hpp"

namespace szlab::cli {
namespace {

RunResult check_failed(RunResult r, const std::string& witness) {
  r.status = kExitCheckFailed;
  r.err = "CHECK_FAILED: " + witness + "\n";
  return r;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

Rational parse_epsilon(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::kParseError, "missing --epsilon");
  Rational eps = parse_rational(text);
  if (eps <= 0) throw Error(ErrorCode::kParseError, "epsilon must be positive, got " + text);
  return eps;
}

Json read_json_file(const std::string& path) {
  if (path.empty()) throw Error(ErrorCode::kParseError, "missing --input");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

BDSpace build_space(const RunConfig& config, std::size_t max_level) {
  BDParams params = BDParams::parse(config.params);
  params.validate();
  BDSpace::Options options;
  options.level_cap = config.level_cap;
  return BDSpace(params, max_level, options);
}

Ordinal wvalue_ordinal(const WValue& w) {
  return add(Ordinal::omega_power(Ordinal(1), w.m), Ordinal(w.l));
}

std::string wvalue_text(const WValue& w) {
  if (w.infinite) return "inf";
  return "(" + to_string(w.c) + ", " + to_string(wvalue_ordinal(w)) + ")";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ordinal <op> A [B]

RunResult run_ordinal(const RunConfig& config) {
  static const std::vector<std::string> unary{"leading-power", "omega-pow"};
  const bool is_unary = std::find(unary.begin(), unary.end(), config.action) != unary.end();
  const std::size_t arity = is_unary ? 1 : 2;
  if (config.operands.size() != arity) {
    throw Error(ErrorCode::kParseError,
                "ordinal " + config.action + " takes " + std::to_string(arity) + " operand(s)");
  }
  std::vector<Ordinal> args;
  for (const auto& text : config.operands) args.push_back(parse_ordinal(text));

  Json result;
  std::string text;
  const std::string& op = config.action;
  if (op == "add" || op == "sub" || op == "mul" || op == "leading-power" || op == "omega-pow") {
    Ordinal value;
    if (op == "add") value = add(args[0], args[1]);
    if (op == "sub") value = subtract(args[0], args[1]);
    if (op == "mul") value = multiply(args[0], args[1]);
    if (op == "leading-power") value = leading_power(args[0]);
    if (op == "omega-pow") value = omega_pow(args[0]);
    text = to_string(value);
    result = encode(value);
  } else if (op == "cmp") {
    auto order = compare(args[0], args[1]);
    text = order < 0 ? "<" : order > 0 ? ">" : "=";
    result = text;
  } else if (op == "absorbs") {
    text = bool_text(absorbs(args[0], args[1]));
    result = absorbs(args[0], args[1]);
  } else {
    throw Error(ErrorCode::kParseError, "unknown ordinal operation " + op);
  }

  RunResult r;
  if (config.format == Format::kJson) {
    Json operands = Json::array();
    for (const auto& a : args) operands.push_back(to_string(a));
    r.out = json_text({{"op", op}, {"operands", operands}, {"result", result}, {"text", text}});
  } else {
    r.out = text + "\n";
  }
  return r;
}

// area

RunResult run_area(const RunConfig& config) {
  const Rational eps = parse_epsilon(config.epsilon);
  Json doc = read_json_file(config.input);
  StepFunction g = decode_step_function(doc);
  CompressionTrace trace = epsilon_area(g, eps);

  std::optional<Ordinal> oracle;
  if (config.oracle_depth) oracle = epsilon_area_oracle(g, eps, *config.oracle_depth);

  RunResult r;
  if (config.format == Format::kJson) {
    Json out = {{"epsilon", to_string(eps)}, {"area", encode(trace.area)}, {"area_text", to_string(trace.area)}};
    if (config.trace) out["trace"] = Json::parse(emit_trace(trace, Format::kJson));
    if (oracle) out["oracle"] = {{"area", encode(*oracle)}, {"agrees", *oracle == trace.area}};
    r.out = json_text(out);
  } else {
    if (config.trace) r.out += emit_trace(trace, Format::kTable);
    r.out += to_string(trace.area) + "\n";
    if (oracle) r.out += "oracle: " + to_string(*oracle) + "\n";
  }
  if (oracle && *oracle != trace.area) {
    return check_failed(std::move(r), "procedure gives " + to_string(trace.area) + ", exhaustive search gives " +
                      to_string(*oracle));
  }
  return r;
}

// measure

RunResult run_measure(const RunConfig& config) {
  const Rational eps = parse_epsilon(config.epsilon);
  OrdinalMeasure mu = decode_measure(read_json_file(config.input));
  StepFunction height = derived_height(mu);
  AreaBoundCheck check = check_area_bound(mu, eps);

  RunResult r;
  if (config.format == Format::kJson) {
    r.out = json_text({{"epsilon", to_string(eps)},
                       {"derived_height", encode(height)},
                       {"area", encode(check.area)},
                       {"ceiling", encode(check.ceiling)},
                       {"szlenk", to_string(szlenk_formula(mu.space(), eps))},
                       {"holds", check.holds}});
  } else {
    r.out = "derived height: " + format_step_function(height) + "\n" + "area: " + to_string(check.area) + "\n" +
            "ceiling: " + to_string(check.ceiling) + "\n" + "bound: " + (check.holds ? "holds" : "violated") + "\n";
  }
  if (!check.holds) {
    return check_failed(std::move(r), "area " + to_string(check.area) + " exceeds " + to_string(check.ceiling));
  }
  return r;
}

// bd

std::string matrix_table(const RationalMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

RunResult run_bd(const RunConfig& config) {
  RunResult r;
  const bool json = config.format == Format::kJson;
  if (config.action == "dims") {
    BDSpace space = build_space(config, config.max_level);
    if (json) {
      r.out = json_text({{"params", encode(space.params())}, {"dims", space.dims()}});
    } else {
      for (std::size_t n = 1; n <= space.max_level(); ++n) {
        r.out += "d_" + std::to_string(n) + " = " + std::to_string(space.dim(n)) + "\n";
      }
    }
  } else if (config.action == "matrix") {
    if (config.from == 0 || config.to <= config.from) {
      throw Error(ErrorCode::kLevelOutOfRange, "need 1 <= from < to");
    }
    BDSpace space = build_space(config, config.to);
    const RationalMatrix& m = space.embed(config.from, config.to);
    r.out = json ? json_text(encode(m)) : matrix_table(m);
  } else if (config.action == "phi") {
    BDSpace space = build_space(config, config.max_level);
    if (json) {
      r.out = json_text(encode_phi_table(space));
    } else {
      r.out = "# " + std::string(kPhiOrdering) + "\n";
      for (std::size_t k = 3; k <= space.dim(space.max_level()); ++k) {
        const PhiTuple& t = space.phi(k);
        std::ostringstream line;
        line << "phi(" << k << ") = (" << (t.sigma1 > 0 ? "+1" : "-1") << ", " << t.i << ", " << t.m << ", "
             << (t.sigma2 > 0 ? "+1" : "-1") << ", " << t.j << ")\n";
        r.out += line.str();
      }
    }
  } else if (config.action == "verify") {
    BDSpace space = build_space(config, config.max_level);
    LambdaReport report = verify_lambda_bound(space, config.max_level);
    auto laws = check_embedding_laws(space, config.max_level);
    if (json) {
      Json norms = Json::array();
      for (const auto& e : report.norms) norms.push_back({{"m", e.m}, {"n", e.n}, {"norm", encode(e.norm)}});
      Json failures = Json::array();
      for (const auto& v : laws) failures.push_back({{"law", v.law}, {"witness", v.witness}});
      r.out = json_text({{"params", encode(space.params())},
                         {"norms", norms},
                         {"lambda_bound", report.passed()},
                         {"law_violations", failures}});
    } else {
      for (const auto& e : report.norms) {
        r.out += "||i_{" + std::to_string(e.m) + "," + std::to_string(e.n) + "}|| = " + to_string(e.norm) + "\n";
      }
      r.out += std::string("lambda bound: ") + (report.passed() ? "PASS" : "FAIL") + "\n";
      r.out += std::string("embedding laws: ") + (laws.empty() ? "PASS" : "FAIL") + "\n";
    }
    if (report.violation) {
      const auto& v = *report.violation;
      return check_failed(std::move(r), "BOUND_VIOLATION: ||i_{" + std::to_string(v.m) + "," + std::to_string(v.n) +
                        "}|| = " + to_string(v.norm));
    }
    if (!laws.empty()) return check_failed(std::move(r), laws.front().law + " " + laws.front().witness);
  } else {
    throw Error(ErrorCode::kParseError, "unknown bd action " + config.action);
  }
  return r;
}

// tree

// x_r = P_s e_r for r <= d_s spans the range of P_s.
std::vector<std::vector<Rational>> projection_basis(const BDSpace& space, std::size_t s) {
  const std::size_t window = space.dim(space.max_level());
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 1; r <= space.dim(s); ++r) {
    std::vector<Rational> e(window);
    e[r - 1] = 1;
    out.push_back(space.project(s, e));
  }
  return out;
}

RunResult run_tree(const RunConfig& config) {
  RunResult r;
  const bool json = config.format == Format::kJson;
  if (config.action == "szlenk-bound") {
    BDParams params = BDParams::parse(config.params);
    params.validate();
    SzlenkBound b = szlenk_bound(params, parse_epsilon(config.epsilon));
    if (json) {
      r.out = json_text({{"depth", b.depth},
                         {"bound", b.bound.get_str()},
                         {"sup_estimate", encode(b.sup_estimate)},
                         {"tail", encode(b.tail)},
                         {"threshold", encode(b.threshold)}});
    } else {
      r.out = "N = " + std::to_string(b.depth) + "\n" + "bound = " + b.bound.get_str() + "\n" +
              "tail = " + to_string(b.tail) + " < " + to_string(b.threshold) + "\n";
    }
    return r;
  }

  BDSpace space = build_space(config, config.max_level);
  TreeValuation g(space, config.k);
  if (config.action == "value") {
    const WValue& w = g.value(TreeNode::parse(config.node));
    r.out = json ? json_text(encode(w)) : wvalue_text(w) + "\n";
  } else if (config.action == "check") {
    if (config.s == 0 || config.s >= space.max_level()) {
      throw Error(ErrorCode::kLevelOutOfRange, "need 1 <= s < max level");
    }
    const auto antichain = maximal_antichain(g, config.s);
    Json rows = Json::array();
    std::optional<std::string> failure;
    std::size_t r_index = 0;
    for (const auto& x : projection_basis(space, config.s)) {
      ++r_index;
      AntichainCheck c = antichain_identity_check(g, config.s, x);
      const std::string label = "P_" + std::to_string(config.s) + " e_" + std::to_string(r_index);
      if (!c.holds() && !failure) {
        failure = label + ": e_k*(x) = " + to_string(c.coordinate) + ", antichain sum = " + to_string(c.antichain_sum) +
                  ", failed splits = " + std::to_string(c.splits_failed);
      }
      if (json) {
        rows.push_back({{"x", label},
                        {"coordinate", encode(c.coordinate)},
                        {"antichain_sum", encode(c.antichain_sum)},
                        {"splits_checked", c.splits_checked},
                        {"holds", c.holds()}});
      } else {
        r.out += label + ": " + to_string(c.coordinate) + " = " + to_string(c.antichain_sum) + " (" +
                 std::to_string(c.splits_checked) + " splits) " + (c.holds() ? "ok" : "FAIL") + "\n";
      }
    }
    if (json) {
      Json nodes = Json::array();
      for (const auto& n : antichain) nodes.push_back(to_string(n));
      r.out = json_text({{"k", config.k}, {"s", config.s}, {"antichain", nodes}, {"checks", rows}});
    } else {
      r.out = "antichain: " + std::to_string(antichain.size()) + " nodes\n" + r.out;
    }
    if (failure) return check_failed(std::move(r), *failure);
  } else {
    throw Error(ErrorCode::kParseError, "unknown tree action " + config.action);
  }
  return r;
}

// verify-all

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

SuiteResult suite_ordinal_laws() {
  SuiteResult s{"ordinal-laws", true, ""};
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 3);
  auto random = [&] {
    Ordinal out;
    for (int i = 0; i < 3; ++i) {
      int e = pick(rng);
      if (e < 3) out = add(out, Ordinal::omega_power(Ordinal(static_cast<std::uint64_t>(e)), coeff(rng)));
    }
    return out;
  };
  std::size_t checked = 0;
  for (int n = 0; n < 300; ++n) {
    Ordinal a = random(), b = random(), c = random();
    bool ok = add(add(a, b), c) == add(a, add(b, c)) && multiply(multiply(a, b), c) == multiply(a, multiply(b, c)) &&
              multiply(a, add(b, c)) == add(multiply(a, b), multiply(a, c)) && subtract(add(a, b), a) == b;
    ++checked;
    if (!ok) {
      s.passed = false;
      s.detail = "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c);
      return s;
    }
  }
  s.detail = std::to_string(checked) + " triples";
  return s;
}

SuiteResult suite_area_oracle() {
  SuiteResult s{"area-vs-search", true, ""};
  const std::vector<Ordinal> values{Ordinal(1), Ordinal(2), Ordinal::omega(), add(Ordinal::omega(), Ordinal(1))};
  std::size_t checked = 0;
  for (long e1 = 1; e1 <= 4; ++e1) {
    for (long e2 = e1; e2 <= 4; ++e2) {
      for (std::size_t v1 = 0; v1 < values.size(); ++v1) {
        for (std::size_t v2 = 0; v2 <= v1; ++v2) {
          std::vector<Piece> pieces{{Rational(e1, 4), values[v1]}};
          if (e2 > e1) pieces.push_back({Rational(e2, 4), values[v2]});
          StepFunction g = StepFunction::from_pieces(pieces);
          for (const Rational& eps : {Rational(1, 4), Rational(1, 2)}) {
            Ordinal fast = epsilon_area(g, eps).area;
            Ordinal slow = epsilon_area_oracle(g, eps, 64);
            ++checked;
            if (fast != slow) {
              s.passed = false;
              s.detail = format_step_function(g) + " at " + to_string(eps) + ": " + to_string(fast) + " vs " +
                         to_string(slow);
              return s;
            }
          }
        }
      }
    }
  }
  s.detail = std::to_string(checked) + " functions";
  return s;
}

SuiteResult suite_area_ceiling() {
  SuiteResult s{"area-ceiling", true, ""};
  std::size_t checked = 0;
  for (std::uint64_t gamma = 0; gamma <= 1; ++gamma) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
      OrdinalSpace space(Ordinal(gamma), k);
      OrdinalMeasure delta(space, {Atom{space.top(), Rational(1)}});
      for (const Rational& eps : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(3, 4)}) {
        AreaBoundCheck c = check_area_bound(delta, eps);
        ++checked;
        if (c.area != c.ceiling) {
          s.passed = false;
          s.detail = "gamma=" + std::to_string(gamma) + " k=" + std::to_string(k) + " eps=" + to_string(eps);
          return s;
        }
      }
    }
  }
  s.detail = std::to_string(checked) + " point masses attain the ceiling";
  return s;
}

SuiteResult suite_bd_dims(const BDSpace& space) {
  SuiteResult s{"bd-dims", true, ""};
  std::size_t below = 0;
  for (std::size_t n = 1; n <= space.max_level(); ++n) {
    std::size_t expected = n == 1 ? 1 : n == 2 ? 2 : space.dim(n - 1) + 4 * space.dim(n - 1) * below;
    if (n >= 2) below += space.dim(n - 1);
    if (space.dim(n) != expected) {
      s.passed = false;
      s.detail = "d_" + std::to_string(n);
      return s;
    }
    s.detail += (n > 1 ? "," : "") + std::to_string(space.dim(n));
  }
  return s;
}

SuiteResult suite_bd_lambda(const BDSpace& space) {
  LambdaReport report = verify_lambda_bound(space, space.max_level());
  SuiteResult s{"bd-lambda-bound", report.passed(), ""};
  if (report.violation) {
    s.detail = "m=" + std::to_string(report.violation->m) + " n=" + std::to_string(report.violation->n);
  } else {
    s.detail = std::to_string(report.norms.size()) + " embeddings";
  }
  return s;
}

SuiteResult suite_bd_laws(const BDSpace& space) {
  auto laws = check_embedding_laws(space, space.max_level());
  SuiteResult s{"bd-embedding-laws", laws.empty(), ""};
  s.detail = laws.empty() ? "composition, identity blocks, sign symmetry, projections"
                          : laws.front().law + " " + laws.front().witness;
  return s;
}

SuiteResult suite_bd_l1(const BDSpace& space) {
  SuiteResult s{"bd-l1-lower-bound", true, ""};
  const std::size_t n = space.max_level();
  std::size_t checked = 0;
  for (std::size_t m = 1; m < n && m <= 3; ++m) {
    const std::size_t dm = space.dim(m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << dm); ++mask) {
      std::vector<Rational> coeffs(dm);
      for (std::size_t i = 0; i < dm; ++i) coeffs[i] = (mask >> i) & 1 ? -1 : 1;
      L1Witness w = l1_lower_witness(space, coeffs, m, n);
      ++checked;
      if (!w.certified) {
        s.passed = false;
        s.detail = "m=" + std::to_string(m) + " mask=" + std::to_string(mask);
        return s;
      }
    }
  }
  s.detail = std::to_string(checked) + " sign vectors";
  return s;
}

SuiteResult suite_tree(const BDSpace& space) {
  SuiteResult s{"tree-antichain", true, ""};
  const std::size_t window = space.dim(space.max_level());
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= std::min<std::size_t>(10, window); ++k) {
    for (std::size_t level = 1; level <= 2 && level < space.max_level(); ++level) {
      TreeValuation g(space, k);
      for (const auto& x : projection_basis(space, level)) {
        AntichainCheck c = antichain_identity_check(g, level, x);
        ++checked;
        if (!c.holds()) {
          s.passed = false;
          s.detail = "k=" + std::to_string(k) + " s=" + std::to_string(level);
          return s;
        }
      }
    }
  }
  s.detail = std::to_string(checked) + " identities";
  return s;
}

SuiteResult suite_szlenk(const BDParams& params) {
  SuiteResult s{"szlenk-bound", true, ""};
  Integer previous;
  bool first = true;
  for (long num = 1; num <= 16; ++num) {
    Rational eps(num, 8);
    eps.canonicalize();
    SzlenkBound b = szlenk_bound(params, eps);
    if (!(b.tail < b.threshold) || (!first && b.bound > previous)) {
      s.passed = false;
      s.detail = "eps=" + to_string(eps);
      return s;
    }
    previous = b.bound;
    first = false;
  }
  s.detail = "eps in 1/8..2";
  return s;
}

RunResult run_verify_all(const RunConfig& config) {
  BDSpace space = build_space(config, config.max_level);
  std::vector<SuiteResult> suites{suite_ordinal_laws(),  suite_area_oracle(),   suite_area_ceiling(),
                                  suite_bd_dims(space),  suite_bd_lambda(space), suite_bd_laws(space),
                                  suite_bd_l1(space),    suite_tree(space),      suite_szlenk(space.params())};
  RunResult r;
  bool all = true;
  Json rows = Json::array();
  for (const auto& s : suites) {
    all = all && s.passed;
    rows.push_back({{"suite", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    if (config.format == Format::kTable) {
      r.out += (s.passed ? "PASS " : "FAIL ") + s.name + " (" + s.detail + ")\n";
    }
  }
  if (config.format == Format::kJson) {
    r.out = json_text({{"params", encode(space.params())}, {"max_level", config.max_level}, {"suites", rows}, {"passed", all}});
  }
  if (!all) {
    auto bad = std::find_if(suites.begin(), suites.end(), [](const SuiteResult& s) { return !s.passed; });
    return check_failed(std::move(r), bad->name + ": " + bad->detail);
  }
  return r;
}

std::string piece_term(const Ordinal& value, const Rational& lo, const Rational& hi) {
  std::string text = to_string(value);
  std::string indicator = "1_{(" + to_string(lo) + "," + to_string(hi) + "]}";
  if (value == Ordinal(1)) return indicator;
  if (text.find('+') != std::string::npos) text = "(" + text + ")";
  return text + "*" + indicator;
}

}  // namespace

std::string format_step_function(const StepFunction& f) {
  if (f.is_zero()) return "0";
  std::string out;
  Rational lo(0);
  for (const auto& p : f.pieces()) {
    if (!p.value.is_zero()) {
      if (!out.empty()) out += " + ";
      out += piece_term(p.value, lo, p.end);
    }
    lo = p.end;
  }
  return out;
}

std::string emit_trace(const CompressionTrace& trace, Format format) {
  std::vector<std::string> lines;
  if (trace.gammas.empty()) {
    lines.push_back("C = 0");
  } else {
    StepFunction previous;
    for (std::size_t i = 0; i < trace.stages.size(); ++i) {
      StepFunction h = trace.accumulated_stage(i);
      if (i > 0 && h == previous) continue;
      lines.push_back("h_" + std::to_string(lines.size() + 1) + " = " + format_step_function(h));
      previous = std::move(h);
    }
  }
  if (format == Format::kJson) {
    return Json{{"epsilon", to_string(trace.epsilon)}, {"area", to_string(trace.area)}, {"lines", lines}}.dump(2) +
           "\n";
  }
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

RunResult run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::kOrdinal: return run_ordinal(config);
      case Command::kArea: return run_area(config);
      case Command::kMeasure: return run_measure(config);
      case Command::kBd: return run_bd(config);
      case Command::kTree: return run_tree(config);
      case Command::kVerifyAll: return run_verify_all(config);
    }
  } catch (const Error& e) {
    return {kExitInputError, "", "error: " + std::string(e.what()) + "\n"};
  }
  return {kExitInputError, "", "error: PARSE_ERROR: unknown command\n"};
}

RunResult run_command_line(const std::vector<std::string>& args, std::size_t level_cap) {
  RunConfig config;
  config.level_cap = level_cap;

  CLI::App app{"Exact ordinal areas, extension-scheme levels and dual-tree checks", "szlab"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  auto* ordinal = app.add_subcommand("ordinal", "Ordinal arithmetic in Cantor normal form");
  ordinal->add_option("op", config.action, "add | sub | mul | cmp | absorbs | leading-power | omega-pow")->required();
  ordinal->add_option("operands", config.operands, "Ordinals such as w^2+1");

  auto* area = app.add_subcommand("area", "eps-area of a non-increasing step function");
  area->add_option("--input", config.input, "Step function JSON")->required();
  area->add_option("--epsilon", config.epsilon, "Width, an exact rational")->required();
  area->add_flag("--trace", config.trace, "Print the compression chain");
  area->add_option("--oracle-depth", config.oracle_depth, "Also run the exhaustive search to this depth");

  auto* measure = app.add_subcommand("measure", "Derived height and area bound of a measure");
  measure->add_option("--input", config.input, "Measure JSON")->required();
  measure->add_option("--epsilon", config.epsilon, "Width, an exact rational")->required();

  auto* bd = app.add_subcommand("bd", "Finite levels of the extension scheme");
  bd->require_subcommand(1);
  bd->add_option("--params", config.params, "a,b,lambda")->capture_default_str();
  auto* dims = bd->add_subcommand("dims", "Dimensions d_1..d_N");
  dims->add_option("--max-level", config.max_level)->capture_default_str();
  auto* matrix = bd->add_subcommand("matrix", "Embedding matrix i_{m,n}");
  matrix->add_option("--from", config.from)->required();
  matrix->add_option("--to", config.to)->required();
  auto* verify = bd->add_subcommand("verify", "Norm bound and embedding laws");
  verify->add_option("--max-level", config.max_level)->capture_default_str();
  auto* phi = bd->add_subcommand("phi", "Tuple enumeration table");
  phi->add_option("--max-level", config.max_level)->capture_default_str();
  for (auto* sub : {dims, matrix, verify, phi}) sub->add_option("--params", config.params, "a,b,lambda");

  auto* tree = app.add_subcommand("tree", "Dual tree of a basis functional");
  tree->require_subcommand(1);
  auto* value = tree->add_subcommand("value", "W-value at a node");
  value->add_option("--k", config.k)->required();
  value->add_option("--node", config.node, "0/1 path, empty for the root");
  auto* check = tree->add_subcommand("check", "Antichain identity over a basis of P_s X");
  check->add_option("--k", config.k)->required();
  check->add_option("--s", config.s)->required();
  auto* bound = tree->add_subcommand("szlenk-bound", "Finite Szlenk bound for the basis");
  bound->add_option("--eps,--epsilon", config.epsilon, "Width, an exact rational")->required();
  for (auto* sub : {value, check, bound}) sub->add_option("--params", config.params, "a,b,lambda");
  for (auto* sub : {value, check}) sub->add_option("--max-level", config.max_level, "Window level");

  auto* all = app.add_subcommand("verify-all", "Run every invariant suite");
  all->add_option("--params", config.params, "a,b,lambda");
  all->add_option("--max-level", config.max_level);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {kExitInputError, "", "error: PARSE_ERROR: " + std::string(e.what()) + "\n"};
  }

  config.format = format == "json" ? Format::kJson : Format::kTable;
  if (ordinal->parsed()) {
    config.command = Command::kOrdinal;
  } else if (area->parsed()) {
    config.command = Command::kArea;
  } else if (measure->parsed()) {
    config.command = Command::kMeasure;
  } else if (bd->parsed()) {
    config.command = Command::kBd;
    for (auto* sub : bd->get_subcommands()) config.action = sub->get_name();
  } else if (tree->parsed()) {
    config.command = Command::kTree;
    for (auto* sub : tree->get_subcommands()) config.action = sub->get_name();
  } else {
    config.command = Command::kVerifyAll;
  }
  return run(config);
}

}  // namespace szlab::cli
