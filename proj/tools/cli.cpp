#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fsc/algebra.hpp"
#include "fsc/calculus.hpp"
#include "fsc/certifier.hpp"
#include "fsc/expr.hpp"
#include "fsc/gallery.hpp"
#include "fsc/theorems.hpp"

namespace fsc::cli {

namespace {

// Flags shared by every subcommand that builds a context / runs a search.
struct Common {
  double alpha = 0.5;
  double s = 0.5;
  SearchBudget budget;
  std::string fn_text;
  std::string output;  // subcommand-specific default, set at registration
  std::string out_path;

  AlphaContext ctx() const {
    AlphaContext c{alpha, s, kDefaultTolBase, kDefaultTolViolation};
    c.validate();
    return c;
  }
};

void add_context_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--alpha", c.alpha, "fractal order, in (0,1]")
      ->capture_default_str();
  cmd->add_option("--s", c.s, "convexity index, in (0,1]")
      ->capture_default_str();
}

void add_budget_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--grid-n", c.budget.grid_n, "points per grid axis")
      ->capture_default_str();
  cmd->add_option("--t-grid-n", c.budget.t_grid_n, "weight grid resolution")
      ->capture_default_str();
  cmd->add_option("--trials", c.budget.random_trials, "random search trials")
      ->capture_default_str();
  cmd->add_option("--refine", c.budget.refine_steps, "local refinement steps")
      ->capture_default_str();
  cmd->add_option("--seed", c.budget.seed, "random search seed")
      ->capture_default_str();
  cmd->add_option("--u-max", c.budget.u_max, "search box upper edge")
      ->capture_default_str();
  cmd->add_option("--threads", c.budget.threads, "worker threads")
      ->capture_default_str();
}

void add_output_flags(CLI::App* cmd, Common& c,
                      const std::vector<std::string>& formats) {
  cmd->add_option("--output", c.output, "report format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--out", c.out_path, "write the report to a file");
}

// --fn accepts either DSL text or the path of a file holding it.
std::string load_fn_text(const std::string& fn) {
  std::ifstream file(fn);
  if (file) {
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return fn;
}

int emit(const std::string& text, const Common& c, std::ostream& out,
         std::ostream& err, int code) {
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << c.out_path << " for writing\n";
      return 2;
    }
    f << text;
    return code;
  }
  out << text;
  return code;
}

json envelope(const char* command) {
  json j;
  j["schema"] = "1";
  j["command"] = command;
  return j;
}

std::string fmt9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyArgs {
  Common c;
  int sense = 1;
  bool concave = false;
  bool relaxed = false;
  bool no_patterns = false;
};

int run_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto ctx = a.c.ctx();
  const auto f = parse(load_fn_text(a.c.fn_text), ctx);
  const ClassKind kind = a.sense == 2 ? ClassKind::gk2 : ClassKind::gk1;
  const ConvexSense dir =
      a.concave ? ConvexSense::concave : ConvexSense::convex;
  const bool patterns = !a.no_patterns;
  const Verdict v = a.relaxed
                        ? certify_relaxed(f, kind, dir, ctx, a.c.budget,
                                          patterns)
                        : certify(f, kind, dir, ctx, a.c.budget, patterns);
  const int code = v.status == CertStatus::violation ? 1 : 0;

  if (a.c.output == "json") {
    auto j = envelope("classify");
    j["fn"] = a.c.fn_text;
    j["verdict"] = v.to_json();
    return emit(j.dump(2) + "\n", a.c, out, err, code);
  }
  std::ostringstream os;
  os << "status: " << to_string(v.status) << '\n'
     << "kind: " << to_string(v.kind) << "  direction: " << to_string(v.sense)
     << "  relaxed: " << (v.relaxed ? "yes" : "no") << '\n'
     << "s: " << fmt9(v.s) << "  alpha: " << fmt9(v.alpha) << '\n';
  if (!v.rule_id.empty()) os << "rule: " << v.rule_id << '\n';
  if (v.witness) {
    const auto& w = *v.witness;
    os << "witness: u=" << num_str(w.u) << " v=" << num_str(w.v)
       << " lambda1=" << num_str(w.lambda1) << " lambda2=" << num_str(w.lambda2)
       << " margin=" << num_str(w.margin) << '\n';
  }
  os << "evaluations: " << v.evaluations
     << "  max margin: " << fmt9(v.max_margin) << '\n';
  return emit(os.str(), a.c, out, err, code);
}

// ---------------------------------------------------------------------------
// theorems
// ---------------------------------------------------------------------------

struct TheoremsArgs {
  Common c;
  std::string suite = "all";
  std::string corpus = "default";
  bool json_flag = false;
};

int run_theorems(const TheoremsArgs& a, std::ostream& out, std::ostream& err) {
  const auto ctx = a.c.ctx();
  const auto reports = run_theorem_suite(ctx, a.c.budget);
  int code = 0;
  for (const auto& r : reports)
    if (r.conclusion != ConclusionStatus::holds) code = 1;

  const bool as_json = a.json_flag || a.c.output == "json";
  if (as_json) {
    auto j = envelope("theorems");
    j["reports"] = suite_json(reports);
    return emit(j.dump(2) + "\n", a.c, out, err, code);
  }
  return emit(format_table(reports), a.c, out, err, code);
}

// ---------------------------------------------------------------------------
// calc
// ---------------------------------------------------------------------------

struct CalcArgs {
  Common c;
  std::string gn_text;  // second function, ratio limits only
  double at = 1.0;
  double from = 0.0;
  double to = 1.0;
};

int emit_calc(const char* op, const json& result, const std::string& text,
              const CalcArgs& a, std::ostream& out, std::ostream& err) {
  if (a.c.output == "json") {
    auto j = envelope("calc");
    j["op"] = op;
    j["fn"] = a.c.fn_text;
    j["result"] = result;
    return emit(j.dump(2) + "\n", a.c, out, err, 0);
  }
  return emit(text, a.c, out, err, 0);
}

int run_calc(const std::string& op, const CalcArgs& a, std::ostream& out,
             std::ostream& err) {
  const auto ctx = a.c.ctx();
  const auto f = parse(load_fn_text(a.c.fn_text), ctx);
  std::ostringstream os;
  if (op == "derive") {
    const auto r = lf_derivative(f, a.at, ctx);
    os << "derivative value: " << fmt9(r.value) << "  base: " << fmt9(r.base)
       << '\n'
       << "converged: " << (r.converged ? "yes" : "no")
       << "  estimate: " << fmt9(r.convergence_estimate) << '\n';
    return emit_calc("derive", r.to_json(), os.str(), a, out, err);
  }
  if (op == "integrate") {
    const auto r = lf_integral(f, a.from, a.to, ctx);
    os << "integral value: " << fmt9(r.value) << "  base: " << fmt9(r.base)
       << '\n'
       << "converged: " << (r.converged ? "yes" : "no")
       << "  estimate: " << fmt9(r.convergence_estimate) << '\n';
    return emit_calc("integrate", r.to_json(), os.str(), a, out, err);
  }
  if (op == "continuity") {
    const auto r = continuity_probe(f, a.at, ctx);
    os << "continuous at " << fmt9(a.at) << ": " << (r.continuous ? "yes" : "no")
       << '\n';
    if (!r.continuous)
      os << "base jump: " << fmt9(r.base_jump)
         << "  value jump: " << fmt9(r.value_jump) << '\n';
    return emit_calc("continuity", r.to_json(), os.str(), a, out, err);
  }
  if (op == "ratio-limit") {
    const auto g = parse(load_fn_text(a.gn_text), ctx);
    const auto r = ratio_limit(f, g, a.at, ctx);
    os << "ratio limit: " << fmt9(r.value) << '\n'
       << "zero-over-zero: " << (r.zero_over_zero ? "yes" : "no")
       << "  methods agree: " << (r.methods_agree ? "yes" : "no")
       << "  converged: " << (r.converged ? "yes" : "no") << '\n';
    return emit_calc("ratio-limit", r.to_json(), os.str(), a, out, err);
  }
  // ftc
  const auto r = ftc_residual(f, a.at, ctx);
  os << "ftc residual at " << fmt9(a.at) << ": " << fmt9(r.residual) << '\n'
     << "derivative of integral: " << fmt9(r.derivative_value)
     << "  f: " << fmt9(r.f_value) << '\n';
  return emit_calc("ftc", r.to_json(), os.str(), a, out, err);
}

// ---------------------------------------------------------------------------
// sandwich
// ---------------------------------------------------------------------------

struct SandwichArgs {
  Common c;
  int n_points = 100;
  double u_max = 4.0;
};

int run_sandwich(const SandwichArgs& a, std::ostream& out, std::ostream& err) {
  const auto ctx = a.c.ctx();
  const auto f = parse(load_fn_text(a.c.fn_text), ctx);
  const auto rep = sandwich_thm37(f, ctx, a.n_points, a.u_max);
  const int code = rep.holds ? 0 : 1;
  if (a.c.output == "json") {
    auto j = envelope("sandwich");
    j["fn"] = a.c.fn_text;
    j["report"] = rep.to_json();
    return emit(j.dump(2) + "\n", a.c, out, err, code);
  }
  std::string csv = "u,lower_value,phi_value,upper_value\n";
  for (const auto& row : rep.rows) {
    csv += num_str(row.u);
    csv += ',';
    csv += num_str(row.lower);
    csv += ',';
    csv += num_str(row.phi);
    csv += ',';
    csv += num_str(row.upper);
    csv += '\n';
  }
  return emit(csv, a.c, out, err, code);
}

// ---------------------------------------------------------------------------
// examples
// ---------------------------------------------------------------------------

struct ExamplesArgs {
  Common c;
};

int run_examples(const ExamplesArgs& a, std::ostream& out, std::ostream& err) {
  const auto ctx = a.c.ctx();
  auto rows = run_example41_matrix({0.0, 1.0, 2.0}, {ctx.s}, {ctx.alpha},
                                   a.c.budget);
  for (const auto& p : canonical_example41_cases(ctx.s))
    rows.push_back(run_example41_row(p, ctx.alpha, a.c.budget));

  int code = 0;
  for (const auto& r : rows)
    if (!r.consistent) code = 1;

  json family_b;
  if (ctx.s < 1.0) {
    const auto ex = make_example42({2.0, ctx.s}, ctx);
    // The second-kind violation basin hugs the jump at u = 1 and gets
    // arbitrarily thin as s drops, so the search needs the jump landmarks
    // as focus points (given to both kinds alike).
    auto fb_budget = a.c.budget;
    fb_budget.focus_points = breakpoints(ex.fn);
    const auto v1 = certify(ex.fn, ClassKind::gk1, ConvexSense::convex, ctx,
                            fb_budget);
    const auto v2 = certify(ex.fn, ClassKind::gk2, ConvexSense::convex, ctx,
                            fb_budget);
    const auto w35 = find_ineq35_witness({2.0, ctx.s}, ctx);
    if (v1.status == CertStatus::violation ||
        v2.status != CertStatus::violation || !w35)
      code = 1;
    family_b["k"] = 2.0;
    family_b["expected"] = ex.expected.to_json();
    family_b["gk1"] = v1.to_json();
    family_b["gk2"] = v2.to_json();
    if (w35) family_b["weighted_pair_witness"] = w35->to_json();
  }

  if (a.c.output == "json") {
    auto j = envelope("examples");
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(r.to_json());
    j["family_a"] = arr;
    if (!family_b.is_null()) j["family_b"] = family_b;
    j["all_consistent"] = (code == 0);
    return emit(j.dump(2) + "\n", a.c, out, err, code);
  }
  return emit(matrix_csv(rows), a.c, out, err, code);
}

}  // namespace

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"certify generalized s-convexity and run local fractional "
               "calculus checks"};
  app.require_subcommand(1);

  ClassifyArgs cl;
  cl.c.output = "json";
  auto* classify = app.add_subcommand(
      "classify", "certify one function against a convexity class");
  classify->add_option("--fn", cl.c.fn_text, "function DSL text or file")
      ->required();
  classify->add_option("--sense", cl.sense, "1 = first kind, 2 = second kind")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  classify->add_flag("--concave", cl.concave, "test the concave direction");
  classify->add_flag("--relaxed", cl.relaxed,
                     "weights constrained by <= instead of =");
  classify->add_flag("--no-patterns", cl.no_patterns,
                     "skip membership rules; search only");
  add_context_flags(classify, cl.c);
  add_budget_flags(classify, cl.c);
  add_output_flags(classify, cl.c, {"json", "text"});

  TheoremsArgs th;
  th.c.output = "text";
  auto* theorems =
      app.add_subcommand("theorems", "run the statement checks end to end");
  theorems->add_option("--suite", th.suite, "which checks to run")
      ->check(CLI::IsMember({"all"}))
      ->capture_default_str();
  theorems->add_option("--corpus", th.corpus, "which function corpus to use")
      ->check(CLI::IsMember({"default"}))
      ->capture_default_str();
  theorems->add_flag("--json", th.json_flag, "shorthand for --output json");
  add_context_flags(theorems, th.c);
  add_budget_flags(theorems, th.c);
  add_output_flags(theorems, th.c, {"json", "text"});

  CalcArgs ca;
  ca.c.output = "json";
  auto* calc = app.add_subcommand("calc", "local fractional calculus");
  calc->require_subcommand(1);
  const auto add_calc_common = [&](CLI::App* op, bool needs_at) {
    op->add_option("--fn", ca.c.fn_text, "function DSL text or file")
        ->required();
    if (needs_at)
      op->add_option("--at", ca.at, "evaluation point")->capture_default_str();
    add_context_flags(op, ca.c);
    add_output_flags(op, ca.c, {"json", "text"});
  };
  add_calc_common(calc->add_subcommand("derive", "order-alpha derivative"),
                  true);
  auto* integrate =
      calc->add_subcommand("integrate", "order-alpha integral over [from,to]");
  integrate->add_option("--from", ca.from, "lower endpoint")
      ->capture_default_str();
  integrate->add_option("--to", ca.to, "upper endpoint")
      ->capture_default_str();
  add_calc_common(integrate, false);
  add_calc_common(
      calc->add_subcommand("continuity", "local fractional continuity probe"),
      true);
  auto* ratio = calc->add_subcommand(
      "ratio-limit", "limit of a value ratio f/g, derivative-assisted");
  ratio->add_option("--gn", ca.gn_text, "denominator DSL text or file")
      ->required();
  add_calc_common(ratio, true);
  add_calc_common(
      calc->add_subcommand("ftc", "fundamental-theorem residual at a point"),
      true);

  SandwichArgs sw;
  sw.c.output = "csv";
  auto* sandwich = app.add_subcommand(
      "sandwich", "enveloping-construction grid for a first-kind member");
  sandwich->add_option("--fn", sw.c.fn_text, "function DSL text or file")
      ->required();
  sandwich->add_option("--n", sw.n_points, "grid points")
      ->capture_default_str();
  sandwich->add_option("--u-max", sw.u_max, "grid upper edge")
      ->capture_default_str();
  add_context_flags(sandwich, sw.c);
  add_output_flags(sandwich, sw.c, {"csv", "json"});

  ExamplesArgs ex;
  ex.c.output = "csv";
  auto* examples = app.add_subcommand(
      "examples", "regression matrix over the example families");
  add_context_flags(examples, ex.c);
  add_budget_flags(examples, ex.c);
  add_output_flags(examples, ex.c, {"csv", "json"});

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fsc");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int ec = app.exit(e, out, err);
    return ec == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(cl, out, err);
    if (app.got_subcommand(theorems)) return run_theorems(th, out, err);
    if (app.got_subcommand(calc)) {
      for (const char* op :
           {"derive", "integrate", "continuity", "ratio-limit", "ftc"})
        if (calc->got_subcommand(op)) return run_calc(op, ca, out, err);
    }
    if (app.got_subcommand(sandwich)) return run_sandwich(sw, out, err);
    if (app.got_subcommand(examples)) return run_examples(ex, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace fsc::cli
