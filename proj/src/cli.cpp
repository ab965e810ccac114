#include "strandtrace/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "strandtrace/error.hpp"
#include "strandtrace/oracle.hpp"
#include "strandtrace/orders.hpp"
#include "strandtrace/reduction.hpp"
#include "strandtrace/search.hpp"
#include "strandtrace/serialize.hpp"
#include "strandtrace/trace.hpp"

namespace strandtrace {

namespace {

constexpr int kVerifyMaxN = kOracleMaxN;
constexpr int kClosedFormMaxN = 9;
constexpr int kClosedFormMaxK = 8;
constexpr int kNewtonMaxI = 40;

struct ShapeArgs {
  std::string lambda;
  int n = 0;
};

struct ComputeArgs {
  ShapeArgs shape;
  std::string basis = "h";
  std::string via = "both";
  std::string format = "table";
};

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 6;
  int max_k = 4;
  int max_i = 20;
  std::string format = "table";
};

struct ClassifyArgs {
  ShapeArgs shape;
  std::string format = "table";
};

struct SearchArgs {
  int strands = 4;
  int max_crossings = 3;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  unsigned threads = 0;
  std::string out_path;
};

StaircaseShape make_shape(const ShapeArgs& a) { return StaircaseShape(a.n, parse_parts(a.lambda)); }

Json parts_json(const Partition& p) { return Json(p.parts()); }

std::string parts_text(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.parts().size(); ++i) s += (i ? "," : "") + std::to_string(p.parts()[i]);
  return s + "]";
}

std::string crossings_text(const StrandDiagram& d) {
  std::string s;
  for (const Crossing& c : d.crossings()) {
    if (!s.empty()) s += " ";
    s += "[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]";
  }
  return s.empty() ? "(none)" : s;
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(12) << key << value << '\n';
}

void symfun_table(std::ostream& out, const SymFun& f) {
  if (f.is_zero()) {
    out << "  0\n";
    return;
  }
  for (const auto& [idx, c] : f.terms()) {
    out << "  " << std::left << std::setw(16) << (std::string(basis_letter(f.basis())) + parts_text(idx))
        << c.get_str() << '\n';
  }
}

// ---------------------------------------------------------------- compute

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  const StaircaseShape shape = make_shape(a.shape);
  const Basis basis = parse_basis(a.basis);
  const bool avoiding = is_211_avoiding(shape);
  const StrandDiagram diagram = diagram_from_lambda(shape);

  SymFun value(Basis::powersum);
  std::string route;
  std::optional<bool> agree;
  SymFun trace_side(Basis::powersum), oracle_side(Basis::powersum);

  if (a.via == "oracle") {
    value = ch_gamma(shape);
    route = "oracle";
  } else if (a.via == "trace") {
    if (avoiding) {
      value = full_trace(diagram);
      route = "trace";
    } else {
      err << "notice: " << shape.to_string() << " contains 2+1+1; the trace does not apply, using the oracle\n";
      value = ch_gamma(shape);
      route = "oracle";
    }
  } else {
    oracle_side = ch_gamma(shape);
    if (avoiding) {
      trace_side = full_trace(diagram);
      route = "trace+oracle";
    } else {
      err << "notice: " << shape.to_string()
          << " contains 2+1+1; comparing the colored-permutation sum with the oracle instead of the trace\n";
      trace_side = diagram_csf(diagram, CsfMode::distinct);
      route = "diagram+oracle";
    }
    if (hooks.corrupt_trace) hooks.corrupt_trace(trace_side);
    bool same = trace_side == oracle_side;
    if (avoiding) same = same && to_basis(reduce_to_h(shape).value, Basis::powersum) == oracle_side;
    agree = same;
    value = oracle_side;
  }

  const SymFun result = to_basis(value, basis);
  const bool positive = is_h_positive(value).positive;

  if (a.format == "json") {
    Json j;
    j["command"] = "compute";
    j["lambda"] = parts_json(shape.lambda());
    j["n"] = shape.n();
    j["via"] = a.via;
    j["route"] = route;
    if (agree) j["agree"] = *agree;
    j["h_positive"] = positive;
    j["result"] = to_json(result);
    if (agree && !*agree) {
      j["trace"] = to_json(to_basis(trace_side, basis));
      j["oracle"] = to_json(to_basis(oracle_side, basis));
    }
    out << j.dump() << '\n';
  } else if (a.format == "csv") {
    out << "partition,coeff\n";
    for (const auto& [idx, c] : result.terms()) {
      std::string parts;
      for (int p : idx.parts()) parts += (parts.empty() ? "" : " ") + std::to_string(p);
      out << parts << ',' << fraction_string(c) << '\n';
    }
  } else {
    row(out, "shape", shape.to_string());
    row(out, "route", route + (agree ? (*agree ? " (agree)" : " (MISMATCH)") : ""));
    row(out, "h-positive", positive ? "yes" : "no");
    row(out, "basis", std::string(basis_letter(basis)));
    symfun_table(out, result);
  }

  if (agree && !*agree) {
    err << "error: trace and oracle disagree for " << shape.to_string() << '\n';
    err << "  trace:  " << to_basis(trace_side, basis).to_string() << '\n';
    err << "  oracle: " << to_basis(oracle_side, basis).to_string() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  Json counterexample;
};

template <typename Check>
CaseResult run_case(const std::string& suite, const std::string& name, Check check) {
  CaseResult r{suite, name, false, nullptr};
  try {
    r.pass = check(r.counterexample);
  } catch (const std::exception& e) {
    r.pass = false;
    r.counterexample = Json{{"exception", e.what()}};
  }
  return r;
}

mpq_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(f);
}

void suite_identities(const VerifyArgs& a, std::vector<CaseResult>& cases) {
  const Basis P = Basis::powersum;
  for (int n = 1; n <= a.max_n; ++n) {
    cases.push_back(run_case("identities", "symmetric-group-sum n=" + std::to_string(n), [&](Json& cx) {
      const SymFun lhs = complete_h(n, P) * factorial(n);
      const SymFun rhs = ch_gamma(StaircaseShape(n, Partition{}));
      if (lhs == rhs) return true;
      cx = Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
      return false;
    }));
  }
  for (int i = 1; i <= a.max_i; ++i) {
    cases.push_back(run_case("identities", "newton i=" + std::to_string(i), [&](Json& cx) {
      const SymFun lhs = complete_h(i, P) * mpq_class(i);
      SymFun rhs(P);
      for (int j = 1; j <= i; ++j) rhs += multiply(complete_h(i - j, P), power_sum(j, P));
      if (lhs == rhs) return true;
      cx = Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
      return false;
    }));
  }
  for (int x = 0; x <= a.max_n; ++x) {
    for (int y = 0; y <= a.max_n; ++y) {
      cases.push_back(run_case("identities", "double-sum a=" + std::to_string(x) + " b=" + std::to_string(y),
                               [&](Json& cx) {
                                 if (double_sum_identity_check(x, y)) return true;
                                 cx = Json{{"a", x}, {"b", y}};
                                 return false;
                               }));
    }
  }
}

void suite_closed_form(const VerifyArgs& a, std::vector<CaseResult>& cases) {
  for (int n = 2; n <= a.max_n; ++n) {
    for (int k = 0; k <= a.max_k; ++k) {
      cases.push_back(run_case("closed-form", "n=" + std::to_string(n) + " k=" + std::to_string(k), [&](Json& cx) {
        const DiagramCombo brute = iterate_trace_partial(StrandDiagram(n, {{1, n}}), k, n - 1);
        const PartialCombo closed = closed_form_single_crossing(n, k);
        const DiagramCombo raw = single_crossing_raw(n, k);
        const bool ok = closed.nonnegative() && closed.expand() == brute && raw == brute;
        if (!ok) {
          cx = Json{{"closed_form", to_json(closed)},
                    {"closed_form_expanded", closed.expand().to_string()},
                    {"raw", raw.to_string()},
                    {"iterated_trace", brute.to_string()}};
        }
        return ok;
      }));
    }
  }
}

void suite_trace(const VerifyArgs& a, std::vector<CaseResult>& cases) {
  for (int n = 1; n <= a.max_n; ++n) {
    for (const StaircaseShape& s : enumerate_shapes(n, ShapeFilter::avoiding_211)) {
      cases.push_back(run_case("trace", s.to_string(), [&](Json& cx) {
        const StrandDiagram d = diagram_from_lambda(s);
        const SymFun oracle = ch_gamma(s);
        const SymFun traced = full_trace(d);
        const SymFun csf = diagram_csf(d, CsfMode::distinct);
        const Reduction red = reduce_to_h(s);
        const bool steps_ok = std::all_of(red.steps.begin(), red.steps.end(),
                                          [](const PartialCombo& c) { return c.nonnegative(); });
        const SymFun oracle_h = to_basis(oracle, Basis::homogeneous);
        const bool ok = traced == oracle && csf == oracle && red.value == oracle_h && steps_ok &&
                        is_h_positive(oracle).positive;
        if (!ok) {
          cx = Json{{"lambda", parts_json(s.lambda())}, {"n", s.n()},        {"oracle", to_json(oracle)},
                    {"trace", to_json(traced)},         {"diagram", to_json(csf)}, {"reduction", to_json(red.value)},
                    {"steps_nonnegative", steps_ok}};
        }
        return ok;
      }));
    }
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const bool want_identities = a.suite == "identities" || a.suite == "all";
  const bool want_closed = a.suite == "closed-form" || a.suite == "all";
  const bool want_trace = a.suite == "trace" || a.suite == "all";
  if (a.max_n < 1 || a.max_k < 0 || a.max_i < 1) throw InvalidInput("verify: bounds must be positive");
  if ((want_identities || want_trace) && a.max_n > kVerifyMaxN) {
    throw GuardExceeded("verify: --max-n above " + std::to_string(kVerifyMaxN));
  }
  if (want_closed && (a.max_n > kClosedFormMaxN || a.max_k > kClosedFormMaxK)) {
    throw GuardExceeded("verify: closed-form bounds above n=" + std::to_string(kClosedFormMaxN) +
                        ", k=" + std::to_string(kClosedFormMaxK));
  }
  if (want_identities && a.max_i > kNewtonMaxI) {
    throw GuardExceeded("verify: --max-i above " + std::to_string(kNewtonMaxI));
  }

  std::vector<CaseResult> cases;
  if (want_identities) suite_identities(a, cases);
  if (want_closed) suite_closed_form(a, cases);
  if (want_trace) suite_trace(a, cases);

  const auto passed = static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
  const std::size_t failed = cases.size() - passed;

  if (a.format == "json") {
    Json j;
    j["command"] = "verify";
    j["suite"] = a.suite;
    j["passed"] = passed;
    j["failed"] = failed;
    Json list = Json::array();
    for (const CaseResult& c : cases) {
      Json e{{"suite", c.suite}, {"case", c.name}, {"pass", c.pass}};
      if (!c.pass) e["counterexample"] = c.counterexample;
      list.push_back(std::move(e));
    }
    j["cases"] = std::move(list);
    out << j.dump() << '\n';
  } else {
    for (const CaseResult& c : cases) {
      out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << c.suite << c.name << '\n';
      if (!c.pass) out << "      counterexample: " << c.counterexample.dump() << '\n';
    }
    out << "summary: " << passed << " passed, " << failed << " failed\n";
  }
  if (failed) {
    err << "error: " << failed << " case(s) failed\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- classify

std::string witness_text(const PatternWitness& w) {
  std::string s;
  for (const auto& chain : w) {
    if (!s.empty()) s += " | ";
    for (std::size_t k = 0; k < chain.size(); ++k) s += (k ? "<" : "") + std::to_string(chain[k]);
  }
  return s;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const StaircaseShape shape = make_shape(a.shape);
  const UIOrder order = poset_from_lambda(shape);
  struct PatternReport {
    std::string name;
    std::vector<int> lengths;
    std::optional<PatternWitness> witness;
  };
  std::vector<PatternReport> reports{{"3+1", {3, 1}, {}}, {"2+2", {2, 2}, {}}, {"2+1+1", {2, 1, 1}, {}}};
  for (auto& r : reports) r.witness = find_pattern(order, r.lengths);
  const bool corner_rule = is_211_avoiding(shape);
  const bool consistent = corner_rule == !reports[2].witness.has_value();
  const std::vector<Cell> corners = corners_of_shape(shape);
  const StrandDiagram diagram = diagram_from_lambda(shape);

  if (a.format == "json") {
    Json j;
    j["command"] = "classify";
    j["lambda"] = parts_json(shape.lambda());
    j["n"] = shape.n();
    Json patterns = Json::object();
    for (const auto& r : reports) {
      Json p{{"avoids", !r.witness.has_value()}};
      if (r.name == "2+1+1") p["corner_rule"] = corner_rule;
      if (r.witness) p["witness"] = *r.witness;
      patterns[r.name] = std::move(p);
    }
    j["patterns"] = std::move(patterns);
    Json cs = Json::array();
    for (const Cell& c : corners) cs.push_back({c.col, c.row});
    j["corners"] = std::move(cs);
    j["crossings"] = to_json(diagram)["crossings"];
    j["staircase_like"] = diagram.is_staircase_like();
    out << j.dump() << '\n';
  } else {
    row(out, "shape", shape.to_string());
    for (const auto& r : reports) {
      std::string verdict = r.witness ? "contains" : "avoids";
      if (r.name == "2+1+1") verdict += std::string(" (corner rule: ") + (corner_rule ? "avoids" : "contains") + ")";
      if (r.witness) verdict += "  witness " + witness_text(*r.witness);
      row(out, r.name, verdict);
    }
    std::string cs;
    for (const Cell& c : corners) cs += (cs.empty() ? "" : " ") + ("(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")");
    row(out, "corners", cs.empty() ? "(none)" : cs);
    row(out, "crossings", crossings_text(diagram));
    row(out, "staircase", diagram.is_staircase_like() ? "yes" : "no");
  }
  if (!consistent) {
    err << "error: corner rule and pattern search disagree on 2+1+1 for " << shape.to_string() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- search

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  SearchOptions o;
  o.strands = a.strands;
  o.max_crossings = a.max_crossings;
  o.mode = a.mode == "random" ? SearchMode::random : SearchMode::exhaustive;
  o.seed = a.seed;
  o.samples = a.samples;
  o.threads = a.threads;

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput("search: cannot open '" + a.out_path + "' for writing");
  }
  std::ostream& log = a.out_path.empty() ? out : static_cast<std::ostream&>(file);
  std::ostream& summary = a.out_path.empty() ? err : out;

  std::size_t total = 0, negative = 0;
  std::optional<Json> first_bad;
  search_general(o, [&](const SearchRecord& r) {
    const Json j = to_json(r);
    log << j.dump() << '\n';
    ++total;
    if (!r.positive) {
      ++negative;
      if (!first_bad) first_bad = j;
    }
  });
  log.flush();
  if (!log) throw InvalidInput("search: failed writing the record log");

  summary << "searched " << total << " diagrams on " << a.strands << " strands (" << a.mode;
  if (o.mode == SearchMode::random) summary << ", seed " << a.seed;
  summary << "): " << (total - negative) << " h-positive, " << negative << " counterexamples\n";
  if (first_bad) {
    summary << "counterexample: " << first_bad->dump() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  CLI::App app{"Chromatic symmetric functions of unit interval orders via strand diagrams", "strandtrace"};
  app.require_subcommand(1);
  app.fallthrough();
  bool timing = false;
  app.add_flag("--timing", timing, "Report elapsed wall time on stderr");

  auto add_shape = [](CLI::App* sub, ShapeArgs& s) {
    sub->add_option("--lambda", s.lambda, "Parts of lambda, comma separated (empty for the empty shape)");
    sub->add_option("--n", s.n, "Side of the ambient staircase")->required()->check(CLI::Range(1, 64));
  };

  ComputeArgs compute;
  CLI::App* c = app.add_subcommand("compute", "Expand ch(Gamma_lambda) in the p, h or e basis");
  add_shape(c, compute.shape);
  c->add_option("--basis", compute.basis, "Output basis")->check(CLI::IsMember({"p", "h", "e"}));
  c->add_option("--via", compute.via, "Computation route")->check(CLI::IsMember({"trace", "oracle", "both"}));
  c->add_option("--format", compute.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));

  VerifyArgs verify;
  CLI::App* v = app.add_subcommand("verify", "Check the identities, the closed form and the trace pipeline");
  v->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember({"identities", "closed-form", "trace", "all"}));
  v->add_option("--max-n", verify.max_n, "Largest n");
  v->add_option("--max-k", verify.max_k, "Largest k for the closed form");
  v->add_option("--max-i", verify.max_i, "Largest i for the Newton identity");
  v->add_option("--format", verify.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  ClassifyArgs classify;
  CLI::App* k = app.add_subcommand("classify", "Pattern avoidance, corners and crossing list of a shape");
  add_shape(k, classify.shape);
  k->add_option("--format", classify.format, "Output format")->check(CLI::IsMember({"table", "json"}));

  SearchArgs search;
  CLI::App* s = app.add_subcommand("search", "Test h-positivity of general strand diagrams");
  s->add_option("--strands", search.strands, "Number of strands")->check(CLI::Range(2, 64));
  s->add_option("--max-crossings", search.max_crossings, "Longest crossing sequence")->check(CLI::Range(1, 64));
  s->add_option("--mode", search.mode, "Enumeration mode")->check(CLI::IsMember({"exhaustive", "random"}));
  s->add_option("--seed", search.seed, "Seed for random mode");
  s->add_option("--samples", search.samples, "Diagrams drawn in random mode");
  s->add_option("--threads", search.threads, "Worker threads (0: STRAND_TRACE_THREADS or all cores)");
  s->add_option("--out", search.out_path, "Write JSONL records here instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (c->parsed()) code = cmd_compute(compute, out, err, hooks);
    else if (v->parsed()) code = cmd_verify(verify, out, err);
    else if (k->parsed()) code = cmd_classify(classify, out, err);
    else code = cmd_search(search, out, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    err << "elapsed: " << std::fixed << std::setprecision(3) << dt.count() << " s\n";
  }
  return code;
}

}  // namespace strandtrace
