#include "fsc/gallery.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fsc {

namespace {

void require_matching_s(double param_s, const AlphaContext& ctx,
                        const char* who) {
  if (std::abs(param_s - ctx.s) > 1e-15)
    throw std::invalid_argument(std::string(who) +
                                ": params.s must equal ctx.s");
}

}  // namespace

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::member: return "member";
    case Expectation::non_member: return "non_member";
    default: return "unknown";
  }
}

json Example41Expected::to_json() const {
  json j;
  j["case_i"] = case_i;
  j["case_ii"] = case_ii;
  j["case_iii"] = case_iii;
  j["case_iv"] = case_iv;
  j["gk1"] = to_string(gk1);
  j["gk2"] = to_string(gk2);
  return j;
}

Example41 make_example41(const Example41Params& p, const AlphaContext& ctx) {
  ctx.validate();
  require_matching_s(p.s, ctx, "make_example41");
  if (!(p.s > 0.0 && p.s <= 1.0))
    throw std::invalid_argument("make_example41: s must lie in (0,1]");

  Example41 out;
  out.params = p;
  out.fn = parse("pw(u == 0 -> fb(" + num_str(p.a) + "); else -> fb(" +
                     num_str(p.b) + ")*mono(" + num_str(p.s) + ") + fb(" +
                     num_str(p.c) + "))",
                 ctx);

  Example41Expected& e = out.expected;
  e.case_i = p.b >= 0.0 && p.c <= p.a;
  e.case_ii = p.b >= 0.0 && p.c < p.a;  // strict: the drop at 0 needs c < a
  e.case_iii = p.b >= 0.0 && 0.0 <= p.c && p.c <= p.a;
  e.case_iv = p.b > 0.0 && p.c < 0.0;
  if (e.case_i) e.gk1 = Expectation::member;
  if (e.case_iii)
    e.gk2 = Expectation::member;
  else if (e.case_iv)
    e.gk2 = Expectation::non_member;
  return out;
}

json Example42Expected::to_json() const {
  json j;
  j["gk1"] = to_string(gk1);
  j["gk2"] = to_string(gk2);
  j["continuous_at_1"] = continuous_at_1;
  return j;
}

Example42 make_example42(const Example42Params& p, const AlphaContext& ctx) {
  ctx.validate();
  require_matching_s(p.s, ctx, "make_example42");
  if (!(p.k > 1.0))
    throw std::invalid_argument("make_example42: k must exceed 1");
  if (!(p.s > 0.0 && p.s < 1.0))
    throw std::invalid_argument("make_example42: s must lie in (0,1)");

  Example42 out;
  out.params = p;
  const std::string e = num_str(p.s / (1.0 - p.s));
  out.fn = parse("pw(u <= 1 -> mono(" + e + "); else -> fb(" + num_str(p.k) +
                     ")*mono(" + e + "))",
                 ctx);
  return out;
}

// ---------------------------------------------------------------------------

Witness Ineq35Witness::def32() const {
  Witness w;
  w.u = 1.0;
  w.v = (a - lambda1) / (1.0 - lambda1);
  w.lambda1 = lambda1;
  w.lambda2 = 1.0 - lambda1;
  w.margin = margin;
  return w;
}

json Ineq35Witness::to_json() const {
  json j;
  j["a"] = a;
  j["lambda1"] = lambda1;
  j["margin"] = margin;
  j["def32"] = def32().to_json();
  return j;
}

std::optional<Ineq35Witness> find_ineq35_witness(const Example42Params& p,
                                                 const AlphaContext& ctx,
                                                 int a_grid, int lambda_grid,
                                                 double a_max) {
  ctx.validate();
  require_matching_s(p.s, ctx, "find_ineq35_witness");
  if (!(p.k > 1.0))
    throw std::invalid_argument("find_ineq35_witness: k must exceed 1");
  if (a_grid < 2 || lambda_grid < 2 || !(a_max > 1.0))
    throw std::invalid_argument("find_ineq35_witness: bad scan budget");

  const double s = p.s;
  const double k = p.k;
  const double expo = s / (1.0 - s);
  // The weighted-pair inequality's slack; negative values are violations.
  const auto slack = [&](double lam, double a) {
    return std::pow(lam, s) +
           k * std::pow(1.0 - lam, s) *
               std::pow((a - lam) / (1.0 - lam), expo) -
           k * std::pow(a, expo);
  };

  double best_lam = 0.0, best_a = 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < lambda_grid; ++i) {
    const double lam = static_cast<double>(i) / lambda_grid;  // [0, 1)
    for (int j = 1; j <= a_grid; ++j) {
      // Cubic ladder: every violation basin of this family hugs a = 1
      // (for lopsided weights its width shrinks like 1 - lam), so the
      // scan concentrates its a-points there instead of spacing them
      // evenly up to a_max.
      const double frac = static_cast<double>(j) / a_grid;
      const double a = 1.0 + (a_max - 1.0) * frac * frac * frac;
      const double g = slack(lam, a);
      if (g < best) {
        best = g;
        best_lam = lam;
        best_a = a;
      }
    }
  }

  // Deterministic pattern refinement around the best grid cell.
  double rl = 1.0 / lambda_grid, ra = (a_max - 1.0) / (a_grid * a_grid);
  for (int step = 0; step < 48; ++step) {
    for (int dl = -1; dl <= 1; ++dl) {
      for (int da = -1; da <= 1; ++da) {
        const double lam =
            std::min(1.0 - 1e-9, std::max(0.0, best_lam + dl * rl));
        const double a = std::min(a_max, std::max(1.0 + 1e-12, best_a + da * ra));
        const double g = slack(lam, a);
        if (g < best) {
          best = g;
          best_lam = lam;
          best_a = a;
        }
      }
    }
    rl *= 0.6;
    ra *= 0.6;
  }

  if (!(best < -ctx.tol_violation)) return std::nullopt;
  Ineq35Witness w;
  w.a = best_a;
  w.lambda1 = best_lam;
  w.margin = -best;
  return w;
}

// ---------------------------------------------------------------------------

json MatrixRow::to_json() const {
  json j;
  j["a"] = params.a;
  j["b"] = params.b;
  j["c"] = params.c;
  j["s"] = params.s;
  j["alpha"] = alpha;
  j["expected"] = expected.to_json();
  j["gk1"] = gk1.to_json();
  j["gk2"] = gk2.to_json();
  j["consistent"] = consistent;
  return j;
}

namespace {

bool verdict_matches(Expectation e, const Verdict& v) {
  switch (e) {
    case Expectation::member: return v.status != CertStatus::violation;
    case Expectation::non_member: return v.status == CertStatus::violation;
    default: return true;
  }
}

bool witness_replays(const BaseFn& basef, const Verdict& v, double s,
                     double tol) {
  if (!v.witness) return v.status != CertStatus::violation;
  const double re = replay_margin(basef, *v.witness, s, v.sense);
  return std::abs(re - v.witness->margin) <= tol && re > 0.0;
}

}  // namespace

MatrixRow run_example41_row(const Example41Params& p, double alpha,
                            const SearchBudget& budget, double replay_tol) {
  const AlphaContext ctx{alpha, p.s, kDefaultTolBase, kDefaultTolViolation};
  const auto ex = make_example41(p, ctx);
  MatrixRow row;
  row.params = ex.params;
  row.alpha = alpha;
  row.expected = ex.expected;
  row.gk1 = certify(ex.fn, ClassKind::gk1, ConvexSense::convex, ctx, budget);
  row.gk2 = certify(ex.fn, ClassKind::gk2, ConvexSense::convex, ctx, budget);
  const auto basef = base_view(ex.fn, ctx);
  row.consistent = verdict_matches(ex.expected.gk1, row.gk1) &&
                   verdict_matches(ex.expected.gk2, row.gk2) &&
                   witness_replays(basef, row.gk1, p.s, replay_tol) &&
                   witness_replays(basef, row.gk2, p.s, replay_tol);
  return row;
}

std::vector<MatrixRow> run_example41_matrix(const std::vector<double>& abc,
                                            const std::vector<double>& ss,
                                            const std::vector<double>& alphas,
                                            const SearchBudget& budget,
                                            double replay_tol) {
  std::vector<MatrixRow> rows;
  rows.reserve(abc.size() * abc.size() * abc.size() * ss.size() *
               alphas.size());
  for (double s : ss) {
    for (double alpha : alphas) {
      for (double a : abc) {
        for (double b : abc) {
          for (double c : abc) {
            rows.push_back(
                run_example41_row({a, b, c, s}, alpha, budget, replay_tol));
          }
        }
      }
    }
  }
  return rows;
}

std::vector<Example41Params> canonical_example41_cases(double s) {
  return {
      {0.0, 1.0, 0.0, s},   // (i) and (iii): member of both kinds
      {0.0, 1.0, -1.0, s},  // (i) and (iv): first-kind member, second-kind not
      {1.0, 1.0, 0.0, s},   // (i)-(iii) with the drop at 0 from (ii)
      {1.0, 1.0, -1.0, s},  // (i), (ii), (iv)
  };
}

namespace {

std::string matrix_csv_line(const MatrixRow& r) {
  std::ostringstream os;
  const auto margin_of = [](const Verdict& v) {
    return v.witness ? v.witness->margin : v.max_margin;
  };
  os << num_str(r.params.a) << ',' << num_str(r.params.b) << ','
     << num_str(r.params.c) << ',' << num_str(r.params.s) << ','
     << num_str(r.alpha) << ',' << to_string(r.expected.gk1) << ','
     << to_string(r.gk1.status) << ',' << num_str(margin_of(r.gk1)) << ','
     << to_string(r.expected.gk2) << ',' << to_string(r.gk2.status) << ','
     << num_str(margin_of(r.gk2)) << ',' << (r.consistent ? "yes" : "no");
  return os.str();
}

}  // namespace

std::string matrix_csv(const std::vector<MatrixRow>& rows) {
  std::string out =
      "a,b,c,s,alpha,expected_gk1,observed_gk1,margin_gk1,"
      "expected_gk2,observed_gk2,margin_gk2,consistent\n";
  for (const auto& r : rows) {
    out += matrix_csv_line(r);
    out += '\n';
  }
  return out;
}

std::vector<CorpusEntry> default_corpus(const AlphaContext& ctx) {
  ctx.validate();
  const std::string S = num_str(ctx.s);
  std::vector<CorpusEntry> out;
  const auto add = [&](std::string name, const std::string& text) {
    out.push_back({std::move(name), parse(text, ctx)});
  };
  add("monomial", "mono(" + S + ")");
  add("monomial-plus-2", "mono(" + S + ") + fb(2)");
  add("two-monomials", "fb(2)*mono(" + S + ") + mono(1)");
  add("capped-below", "max(mono(" + S + "), fb(1))");
  add("decreasing-step-weight",
      "mono(" + S + ") * pw(u <= 2 -> fb(1); else -> fb(0.5))");
  for (const auto& p : canonical_example41_cases(ctx.s)) {
    const auto ex = make_example41(p, ctx);
    out.push_back({"shifted-monomial(" + num_str(p.a) + "," + num_str(p.b) +
                       "," + num_str(p.c) + ")",
                   ex.fn});
  }
  out.push_back(
      {"shifted-monomial(0,1,2)", make_example41({0, 1, 2, ctx.s}, ctx).fn});
  if (ctx.s < 1.0) {
    out.push_back(
        {"step-scaled-monomial(k=2)", make_example42({2.0, ctx.s}, ctx).fn});
  }
  return out;
}

}  // namespace fsc
