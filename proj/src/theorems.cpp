#include "fsc/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fsc {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

const std::vector<double>& probe_points() {
  static const std::vector<double> pts{0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 1.0,
                                       1.5,  2.0,  3.0, 5.0,  7.5,  10.0};
  return pts;
}

bool sampled_nondecreasing(const BaseFn& basef, double tol) {
  try {
    double prev = basef(probe_points().front());
    for (std::size_t i = 1; i < probe_points().size(); ++i) {
      const double cur = basef(probe_points()[i]);
      if (cur < prev - tol) return false;
      prev = cur;
    }
    return true;
  } catch (const EvalError&) {
    return false;
  }
}

bool sampled_nonneg(const BaseFn& basef, double tol) {
  try {
    if (basef(0.0) < -tol) return false;
    for (double u : probe_points()) {
      if (basef(u) < -tol) return false;
    }
    return true;
  } catch (const EvalError&) {
    return false;
  }
}

// One-sided limit of the base curve at 0+.  Geometric sample abscissas make
// power-law tails b x^c geometric, which one Aitken delta-squared step
// collapses to the limit.
double right_limit_base(const BaseFn& basef) {
  const double y0 = basef(1e-8);
  const double y1 = basef(1e-9);
  const double y2 = basef(1e-10);
  const double d1 = y2 - y1;
  const double d0 = y1 - y0;
  const double den = d1 - d0;
  const double scale = std::abs(y0) + std::abs(y1) + std::abs(y2);
  if (std::abs(den) > 1e-14 * std::max(1.0, scale)) {
    return y2 - d1 * d1 / den;
  }
  return y2;
}

bool limit_matches(double limit, double at0) {
  return std::abs(limit - at0) <= 1e-6 * std::max(1.0, std::abs(at0));
}

bool member(const Verdict& v) { return v.status != CertStatus::violation; }

std::string verdict_note(const Verdict& v) {
  std::ostringstream os;
  if (v.status == CertStatus::proven_member) {
    os << "member by rule " << v.rule_id;
  } else if (v.status == CertStatus::no_violation_found) {
    os << "no violation (max margin " << fmt(v.max_margin) << ")";
  } else {
    os << "violation margin " << fmt(v.witness->margin) << " at (u="
       << fmt(v.witness->u) << ", v=" << fmt(v.witness->v) << ", l1="
       << fmt(v.witness->lambda1) << ", l2=" << fmt(v.witness->lambda2)
       << ")";
  }
  return os.str();
}

TheoremReport base_report(const char* id, std::string instance,
                          const AlphaContext& ctx) {
  TheoremReport r;
  r.theorem_id = id;
  r.instance = std::move(instance);
  r.s = ctx.s;
  r.alpha = ctx.alpha;
  return r;
}

void add_hyp(TheoremReport& r, const char* name, bool ok) {
  r.hypotheses.push_back({name, ok});
}

void finish(TheoremReport& r, bool conclusion_ok, std::string details) {
  r.details = std::move(details);
  if (!r.hypotheses_met()) {
    r.conclusion = ConclusionStatus::hypothesis_unmet;
  } else {
    r.conclusion = conclusion_ok ? ConclusionStatus::holds
                                 : ConclusionStatus::falsified;
  }
}

AlphaContext with_s(const AlphaContext& ctx, double s) {
  AlphaContext out = ctx;
  out.s = s;
  return out;
}

}  // namespace

bool TheoremReport::hypotheses_met() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const HypothesisCheck& h) { return h.satisfied; });
}

json TheoremReport::to_json() const {
  json j;
  j["theorem_id"] = theorem_id;
  j["instance"] = instance;
  j["s"] = s;
  j["alpha"] = alpha;
  json hyps = json::array();
  for (const auto& h : hypotheses) {
    json e;
    e["name"] = h.name;
    e["satisfied"] = h.satisfied;
    hyps.push_back(e);
  }
  j["hypotheses"] = hyps;
  j["conclusion"] = to_string(conclusion);
  j["details"] = details;
  return j;
}

const char* to_string(ConclusionStatus status) {
  switch (status) {
    case ConclusionStatus::holds:
      return "holds";
    case ConclusionStatus::falsified:
      return "falsified";
    case ConclusionStatus::hypothesis_unmet:
      return "hypothesis_unmet";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

TheoremReport check_thm31a(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm31a", pretty_print(f), ctx);
  const auto vf = certify(f, ClassKind::gk1, ConvexSense::convex, ctx, budget);
  add_hyp(r, "f_in_first_kind", member(vf));

  const auto basef = base_view(f, ctx);
  const double tol = ctx.tol_violation;

  const bool mono_ok = sampled_nondecreasing(basef, tol);

  bool origin_ok = false;
  std::string origin_note;
  try {
    const double lim = right_limit_base(basef);
    const double at0 = basef(0.0);
    origin_ok = lim <= at0 + 1e-6 * std::max(1.0, std::abs(at0));
    origin_note = "f(0+) base " + fmt(lim) + " vs f(0) base " + fmt(at0);
  } catch (const EvalError&) {
    origin_note = "origin evaluation failed";
  }

  // Scaling inequality f(t u) <= f(u) for t in [2^{1-1/s}, 1].
  bool scale_ok = true;
  const double t_lo = std::pow(2.0, 1.0 - 1.0 / ctx.s);
  try {
    for (int i = 0; i <= 8; ++i) {
      const double t = t_lo + (1.0 - t_lo) * i / 8.0;
      for (double u : probe_points()) {
        if (basef(t * u) > basef(u) + tol) {
          scale_ok = false;
        }
      }
    }
  } catch (const EvalError&) {
    scale_ok = false;
  }

  finish(r, mono_ok && origin_ok && scale_ok,
         "membership: " + verdict_note(vf) + "; nondecreasing on (0,inf): " +
             (mono_ok ? "yes" : "no") + "; " + origin_note +
             "; scaling inequality on [" + fmt(t_lo) + ",1]: " +
             (scale_ok ? "yes" : "no"));
  return r;
}

TheoremReport check_thm31b(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm31b", pretty_print(f), ctx);
  const auto vf = certify(f, ClassKind::gk2, ConvexSense::convex, ctx, budget);
  add_hyp(r, "f_in_second_kind", member(vf));
  const bool nonneg = sampled_nonneg(base_view(f, ctx), ctx.tol_violation);
  finish(r, nonneg,
         "membership: " + verdict_note(vf) +
             "; f >= 0^alpha on sample grid: " + (nonneg ? "yes" : "no"));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

double bi_op(BivariateOp op, double x, double y) {
  switch (op) {
    case BivariateOp::sum:
      return x + y;
    case BivariateOp::max:
      return std::max(x, y);
    case BivariateOp::product:
      return x * y;
  }
  return 0.0;
}

const char* bi_name(BivariateOp op) {
  switch (op) {
    case BivariateOp::sum:
      return "sum";
    case BivariateOp::max:
      return "max";
    case BivariateOp::product:
      return "product";
  }
  return "?";
}

// Sampled test of the two-variable generalized convexity condition with
// independent weights, on the base surface.
bool bivariate_convex(BivariateOp op, double s, double tol,
                      std::string* counter) {
  static const double vals[] = {0.0, 0.25, 0.5, 1.0, 2.0, 3.0};
  static const double lams[] = {0.0, 0.2, 0.5, 0.8, 1.0};
  for (double l1 : lams) {
    for (double l2 : lams) {
      const double l1s = std::pow(l1, s);
      const double l2s = std::pow(l2, s);
      for (double u : vals) {
        for (double r : vals) {
          for (double v : vals) {
            for (double t : vals) {
              const double lhs =
                  bi_op(op, l1s * u + l2s * v, l1s * r + l2s * t);
              const double rhs =
                  l1s * bi_op(op, u, r) + l2s * bi_op(op, v, t);
              if (lhs > rhs + tol) {
                if (counter) {
                  *counter = "counterexample at (u=" + fmt(u) + ", r=" +
                             fmt(r) + ", v=" + fmt(v) + ", t=" + fmt(t) +
                             ", l1=" + fmt(l1) + ", l2=" + fmt(l2) +
                             "): lhs " + fmt(lhs) + " > rhs " + fmt(rhs);
                }
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool bivariate_monotone(BivariateOp op, double tol) {
  static const double vals[] = {0.0, 0.5, 1.0, 2.0, 3.0};
  for (double x : vals) {
    for (double y : vals) {
      if (bi_op(op, x + 0.5, y) < bi_op(op, x, y) - tol) return false;
      if (bi_op(op, x, y + 0.5) < bi_op(op, x, y) - tol) return false;
    }
  }
  return true;
}

}  // namespace

TheoremReport check_thm32(const BaseFn& f, const BaseFn& g, BivariateOp op,
                          const AlphaContext& ctx,
                          const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm32",
                       std::string("h = ") + bi_name(op) + "(f, g)", ctx);
  const double tol = ctx.tol_violation;

  const auto vf =
      certify_classical(f, ClassKind::gk1, ConvexSense::convex, ctx, budget);
  const auto vg =
      certify_classical(g, ClassKind::gk1, ConvexSense::convex, ctx, budget);
  add_hyp(r, "f_classical_first_kind", member(vf));
  add_hyp(r, "g_classical_first_kind", member(vg));

  std::string counter;
  const bool bc = bivariate_convex(op, ctx.s, tol, &counter);
  add_hyp(r, "F_bivariate_generalized_convex", bc);
  add_hyp(r, "F_nondecreasing_each_slot", bivariate_monotone(op, tol));

  const BaseFn h = [&f, &g, op](double u) { return bi_op(op, f(u), g(u)); };
  const auto vh =
      certify_classical(h, ClassKind::gk1, ConvexSense::convex, ctx, budget);

  std::string details = "h: " + verdict_note(vh);
  if (!bc) details += "; F " + std::string(bi_name(op)) + ": " + counter;
  finish(r, member(vh), std::move(details));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

TheoremReport check_thm33(const char* id, const FnPtr& f, ClassKind kind,
                          const AlphaContext& ctx, const SearchBudget& budget,
                          bool origin_must_vanish) {
  ctx.validate();
  auto r = base_report(id, pretty_print(f), ctx);
  const auto strict =
      certify(f, kind, ConvexSense::convex, ctx, budget);
  add_hyp(r, kind == ClassKind::gk1 ? "f_in_first_kind" : "f_in_second_kind",
          member(strict));

  double at0 = 0.0;
  bool evaluable = true;
  try {
    at0 = base_view(f, ctx)(0.0);
  } catch (const EvalError&) {
    evaluable = false;
  }
  add_hyp(r, "origin_evaluable", evaluable);

  const bool predicted_clean =
      evaluable && (origin_must_vanish ? std::abs(at0) <= ctx.tol_violation
                                       : at0 <= ctx.tol_violation);
  const auto relaxed = certify_relaxed(f, kind, ConvexSense::convex, ctx,
                                       budget, /*use_patterns=*/false);
  const bool clean = member(relaxed);

  finish(r, predicted_clean == clean,
         "origin base " + fmt(at0) + " predicts relaxed " +
             (predicted_clean ? "clean" : "violation") + "; relaxed search: " +
             verdict_note(relaxed));
  return r;
}

}  // namespace

TheoremReport check_thm33a(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  return check_thm33("thm33a", f, ClassKind::gk1, ctx, budget,
                     /*origin_must_vanish=*/false);
}

TheoremReport check_thm33b(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  return check_thm33("thm33b", f, ClassKind::gk2, ctx, budget,
                     /*origin_must_vanish=*/true);
}

// ---------------------------------------------------------------------------

TheoremReport check_thm34a(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm34a", pretty_print(f), ctx);
  const auto v2 = certify(f, ClassKind::gk2, ConvexSense::convex, ctx, budget);
  add_hyp(r, "f_in_second_kind", member(v2));
  bool origin_zero = false;
  try {
    origin_zero = std::abs(base_view(f, ctx)(0.0)) <= ctx.tol_violation;
  } catch (const EvalError&) {
  }
  add_hyp(r, "origin_zero", origin_zero);

  const auto v1 = certify(f, ClassKind::gk1, ConvexSense::convex, ctx, budget,
                          /*use_patterns=*/false);
  finish(r, member(v1), "first kind at same s: " + verdict_note(v1));
  return r;
}

TheoremReport check_thm34b(const FnPtr& f, double s1, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm34b", pretty_print(f), ctx);
  add_hyp(r, "s1_in_range", s1 > 0.0 && s1 <= ctx.s);
  const auto v2 = certify(f, ClassKind::gk2, ConvexSense::convex, ctx, budget);
  add_hyp(r, "f_in_second_kind_at_s2", member(v2));
  bool origin_zero = false;
  try {
    origin_zero = std::abs(base_view(f, ctx)(0.0)) <= ctx.tol_violation;
  } catch (const EvalError&) {
  }
  add_hyp(r, "origin_zero", origin_zero);

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }
  const auto down = certify(f, ClassKind::gk2, ConvexSense::convex,
                            with_s(ctx, s1), budget, /*use_patterns=*/false);
  r.s = s1;
  finish(r, member(down),
         "second kind at s1=" + fmt(s1) + ": " + verdict_note(down));
  return r;
}

TheoremReport check_thm34c(const FnPtr& f, double s1, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm34c", pretty_print(f), ctx);
  add_hyp(r, "s1_in_range", s1 > 0.0 && s1 <= ctx.s);
  const auto v1 = certify(f, ClassKind::gk1, ConvexSense::convex, ctx, budget);
  add_hyp(r, "f_in_first_kind_at_s2", member(v1));
  bool origin_le_zero = false;
  try {
    origin_le_zero = base_view(f, ctx)(0.0) <= ctx.tol_violation;
  } catch (const EvalError&) {
  }
  add_hyp(r, "origin_at_most_zero", origin_le_zero);

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }
  const auto down = certify(f, ClassKind::gk1, ConvexSense::convex,
                            with_s(ctx, s1), budget, /*use_patterns=*/false);
  r.s = s1;
  finish(r, member(down),
         "first kind at s1=" + fmt(s1) + ": " + verdict_note(down));
  return r;
}

// ---------------------------------------------------------------------------

TheoremReport check_thm35(const FnPtr& p, const AlphaContext& ctx,
                          const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm35", "p = " + pretty_print(p), ctx);
  add_hyp(r, "s_strictly_inside", ctx.s < 1.0);
  const auto basep = base_view(p, ctx);
  add_hyp(r, "p_nondecreasing",
          ctx.s < 1.0 && sampled_nondecreasing(basep, ctx.tol_violation));
  add_hyp(r, "p_nonnegative",
          ctx.s < 1.0 && sampled_nonneg(basep, ctx.tol_violation));
  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }

  const FnPtr h = thm35_pattern(p, ctx.s);
  // Patterns stay off: the structural shortcut for exactly this shape must
  // not be allowed to confirm itself.
  const auto vh = certify(h, ClassKind::gk1, ConvexSense::convex, ctx, budget,
                          /*use_patterns=*/false);
  finish(r, member(vh),
         "h = " + pretty_print(h) + ": " + verdict_note(vh));
  return r;
}

// ---------------------------------------------------------------------------

TheoremReport check_thm36a(const FnPtr& f, double s1, const ScalarExprPtr& g,
                           double s2, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  ctx.validate();
  if (!g) throw std::invalid_argument("check_thm36a: null inner map");
  auto r = base_report("thm36a",
                       "f = " + pretty_print(f) + ", g = " + pretty_print(g),
                       ctx);
  add_hyp(r, "s_parameters_in_range",
          s1 > 0.0 && s1 <= 1.0 && s2 > 0.0 && s2 <= 1.0 && s1 * s2 <= 1.0);

  const auto ctx_f = with_s(ctx, s1);
  const auto vf =
      certify(f, ClassKind::gk1, ConvexSense::convex, ctx_f, budget);
  add_hyp(r, "f_in_first_kind_at_s1", member(vf));
  const auto basef = base_view(f, ctx_f);
  add_hyp(r, "f_nondecreasing",
          sampled_nondecreasing(basef, ctx.tol_violation));
  bool f_origin = false;
  try {
    f_origin = basef(0.0) <= ctx.tol_violation;
  } catch (const EvalError&) {
  }
  add_hyp(r, "f_origin_at_most_zero", f_origin);

  const BaseFn gbase = [g](double u) { return g->eval(u); };
  const auto vg = certify_classical(gbase, ClassKind::gk1,
                                    ConvexSense::convex, with_s(ctx, s2),
                                    budget);
  add_hyp(r, "g_classical_first_kind_at_s2", member(vg));
  add_hyp(r, "g_nonnegative", sampled_nonneg(gbase, ctx.tol_violation));
  bool g_zero = false;
  try {
    g_zero = std::abs(gbase(0.0)) <= ctx.tol_violation;
  } catch (const EvalError&) {
  }
  add_hyp(r, "g_origin_zero", g_zero);

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }

  const FnPtr h = compose(f, g);
  const auto ctx_h = with_s(ctx, s1 * s2);
  const auto vh = certify(h, ClassKind::gk1, ConvexSense::convex, ctx_h,
                          budget, /*use_patterns=*/false);
  r.s = s1 * s2;
  finish(r, member(vh),
         "f o g at s1*s2 = " + fmt(s1 * s2) + ": " + verdict_note(vh));
  return r;
}

TheoremReport check_thm36b(const FnPtr& f, double s1, const FnPtr& g,
                           double s2, const AlphaContext& ctx,
                           const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm36b",
                       "f = " + pretty_print(f) + ", g = " + pretty_print(g),
                       ctx);
  add_hyp(r, "s_parameters_inside",
          s1 > 0.0 && s1 < 1.0 && s2 > 0.0 && s2 < 1.0);

  const auto ctx_f = with_s(ctx, s1);
  const auto ctx_g = with_s(ctx, s2);
  const auto vf =
      certify(f, ClassKind::gk1, ConvexSense::convex, ctx_f, budget);
  const auto vg =
      certify(g, ClassKind::gk1, ConvexSense::convex, ctx_g, budget);
  add_hyp(r, "f_in_first_kind_at_s1", member(vf));
  add_hyp(r, "g_in_first_kind_at_s2", member(vg));

  const auto basef = base_view(f, ctx_f);
  const auto baseg = base_view(g, ctx_g);
  add_hyp(r, "f_nonnegative", sampled_nonneg(basef, ctx.tol_violation));
  add_hyp(r, "g_nonnegative", sampled_nonneg(baseg, ctx.tol_violation));

  bool condition = false;
  try {
    const bool f_zero = std::abs(basef(0.0)) <= ctx.tol_violation;
    const bool g_zero = std::abs(baseg(0.0)) <= ctx.tol_violation;
    const bool f_cont = limit_matches(right_limit_base(basef), basef(0.0));
    const bool g_cont = limit_matches(right_limit_base(baseg), baseg(0.0));
    condition = (f_zero && g_cont) || (g_zero && f_cont);
  } catch (const EvalError&) {
  }
  add_hyp(r, "origin_condition", condition);

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }

  const FnPtr h = combine(CombineKind::product, f, g);
  const double smin = std::min(s1, s2);
  const auto vh = certify(h, ClassKind::gk1, ConvexSense::convex,
                          with_s(ctx, smin), budget, /*use_patterns=*/false);
  r.s = smin;
  finish(r, member(vh),
         "f*g at min(s1,s2) = " + fmt(smin) + ": " + verdict_note(vh));
  return r;
}

TheoremReport check_remark34(const FnPtr& f, const FnPtr& g,
                             const AlphaContext& ctx,
                             const SearchBudget& budget) {
  ctx.validate();
  const auto ctx1 = with_s(ctx, 1.0);
  auto r = base_report("remark34",
                       "f = " + pretty_print(f) + ", g = " + pretty_print(g),
                       ctx1);
  const auto vf =
      certify(f, ClassKind::gk2, ConvexSense::convex, ctx1, budget);
  const auto vg =
      certify(g, ClassKind::gk2, ConvexSense::convex, ctx1, budget);
  add_hyp(r, "f_generalized_convex", member(vf));
  add_hyp(r, "g_generalized_convex", member(vg));
  const auto basef = base_view(f, ctx1);
  const auto baseg = base_view(g, ctx1);
  add_hyp(r, "f_nonnegative", sampled_nonneg(basef, ctx.tol_violation));
  add_hyp(r, "g_nonnegative", sampled_nonneg(baseg, ctx.tol_violation));
  add_hyp(r, "same_monotone_direction",
          (sampled_nondecreasing(basef, ctx.tol_violation) &&
           sampled_nondecreasing(baseg, ctx.tol_violation)));

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }
  const FnPtr h = combine(CombineKind::product, f, g);
  const auto vh = certify(h, ClassKind::gk2, ConvexSense::convex, ctx1,
                          budget, /*use_patterns=*/false);
  finish(r, member(vh), "f*g at s=1: " + verdict_note(vh));
  return r;
}

// ---------------------------------------------------------------------------

PhiTypeReport phi_type_check(const FnPtr& f, const AlphaContext& ctx) {
  ctx.validate();
  PhiTypeReport rep;
  const auto basef = base_view(f, ctx);
  try {
    rep.origin_zero = std::abs(basef(0.0)) <= ctx.tol_violation;
  } catch (const EvalError&) {
    return rep;
  }
  rep.non_decreasing = sampled_nondecreasing(basef, ctx.tol_violation);
  rep.non_negative = sampled_nonneg(basef, ctx.tol_violation);
  rep.continuous = true;
  for (double x0 : {0.0, 0.5, 1.0, 2.0}) {
    try {
      const auto probe = continuity_probe(f, x0, ctx);
      if (!probe.continuous) rep.continuous = false;
    } catch (const EvalError&) {
      rep.continuous = false;
    }
  }
  return rep;
}

json PhiTypeReport::to_json() const {
  json j;
  j["origin_zero"] = origin_zero;
  j["continuous"] = continuous;
  j["non_decreasing"] = non_decreasing;
  j["non_negative"] = non_negative;
  j["ok"] = ok();
  return j;
}

TheoremReport check_cor31(const FnPtr& phi, const AlphaContext& ctx,
                          const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("cor31", "Phi = " + pretty_print(phi) +
                                    ", g = pow(u, " + num_str(ctx.s) + ")",
                       ctx);
  const auto vphi = certify(phi, ClassKind::gk2, ConvexSense::convex,
                            with_s(ctx, 1.0), budget);
  add_hyp(r, "Phi_generalized_convex", member(vphi));
  const auto pt = phi_type_check(phi, ctx);
  add_hyp(r, "Phi_phi_type", pt.ok());

  const ScalarExprPtr g =
      ScalarExpr::make_pow(ScalarExpr::make_u(), ctx.s);
  const BaseFn gbase = [g](double u) { return g->eval(u); };
  const auto vg = certify_classical(gbase, ClassKind::gk1,
                                    ConvexSense::convex, ctx, budget);
  add_hyp(r, "g_classical_first_kind", member(vg));
  bool g_phi_fn = false;
  try {
    g_phi_fn = std::abs(gbase(0.0)) <= ctx.tol_violation &&
               sampled_nondecreasing(gbase, ctx.tol_violation) &&
               sampled_nonneg(gbase, ctx.tol_violation);
  } catch (const EvalError&) {
  }
  add_hyp(r, "g_phi_function", g_phi_fn);

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }
  const FnPtr h = compose(phi, g);
  const auto vh = certify(h, ClassKind::gk1, ConvexSense::convex, ctx, budget,
                          /*use_patterns=*/false);
  finish(r, member(vh), "Phi(u^s): " + verdict_note(vh));
  return r;
}

TheoremReport check_cor32(const FnPtr& f, const AlphaContext& ctx,
                          const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("cor32",
                       "f = " + pretty_print(f) + ", Phi = pow(u, 2)", ctx);
  const auto vf = certify(f, ClassKind::gk2, ConvexSense::convex, ctx, budget);
  add_hyp(r, "f_in_second_kind", member(vf));
  const auto pt = phi_type_check(f, ctx);
  add_hyp(r, "f_phi_type", pt.ok());

  const ScalarExprPtr phi =
      ScalarExpr::make_pow(ScalarExpr::make_u(), 2.0);
  const BaseFn phibase = [phi](double u) { return phi->eval(u); };
  const auto vphi = certify_classical(phibase, ClassKind::gk2,
                                      ConvexSense::convex, with_s(ctx, 1.0),
                                      budget);
  add_hyp(r, "Phi_classical_convex", member(vphi));
  bool phi_fn = false;
  try {
    phi_fn = std::abs(phibase(0.0)) <= ctx.tol_violation &&
             sampled_nondecreasing(phibase, ctx.tol_violation) &&
             sampled_nonneg(phibase, ctx.tol_violation);
  } catch (const EvalError&) {
  }
  add_hyp(r, "Phi_phi_function", phi_fn);

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }
  const FnPtr h = compose(f, phi);
  const auto vh = certify(h, ClassKind::gk2, ConvexSense::convex, ctx, budget,
                          /*use_patterns=*/false);
  finish(r, member(vh), "f(Phi(u)): " + verdict_note(vh));
  return r;
}

// ---------------------------------------------------------------------------

std::function<double(double)> build_phi_thm37(const FnPtr& f,
                                              const AlphaContext& ctx) {
  ctx.validate();
  if (!(ctx.s < 1.0))
    throw std::invalid_argument("build_phi_thm37: needs s < 1");
  const auto basef = base_view(f, ctx);
  const double s = ctx.s;
  const AlphaContext cctx = ctx;
  const FractalFn g = [basef, s](double t) {
    return FractalScalar::from_base(basef(std::pow(t, 1.0 / s)) / t);
  };
  const MeshSpec mesh{512, 3, 1e-10};
  // The construction multiplies the integral by Gamma(1+alpha) in value
  // space, which cancels the integral's own normalization; in base space
  // that is a factor Gamma(1+alpha)^(1/alpha).
  const double gfac = std::pow(fsc::gamma(1.0 + ctx.alpha), 1.0 / ctx.alpha);
  return [g, cctx, mesh, gfac](double u) {
    if (u <= 0.0) return 0.0;
    return gfac * lf_integral(g, 0.0, u, cctx, mesh).base;
  };
}

SandwichReport sandwich_thm37(const FnPtr& f, const AlphaContext& ctx,
                              int n_points, double u_max) {
  ctx.validate();
  if (n_points < 2) throw std::invalid_argument("sandwich: n_points >= 2");
  if (!(u_max > 0.0)) throw std::invalid_argument("sandwich: u_max > 0");

  const auto basef = base_view(f, ctx);
  const auto B = build_phi_thm37(f, ctx);
  const double shrink = std::pow(2.0, -1.0 / ctx.s);
  const double tol = 1e-7;

  SandwichReport rep;
  rep.holds = true;
  const auto value = [&ctx](double b) {
    return FractalScalar::from_base(b).value(ctx.alpha);
  };

  std::vector<double> us;
  for (int i = 1; i <= n_points; ++i) {
    us.push_back(u_max * i / n_points);
  }
  std::vector<double> phis;
  for (double u : us) {
    const double lower = basef(shrink * u);
    const double phi_b = B(std::pow(u, ctx.s));
    const double upper = basef(u);
    phis.push_back(phi_b);
    rep.rows.push_back({u, value(lower), value(phi_b), value(upper)});
    const double band = tol * std::max(1.0, std::abs(upper));
    if (lower > phi_b + band || phi_b > upper + band) rep.holds = false;
  }

  // Midpoint convexity of the base of Phi on a subsample of row points.
  rep.phi_midpoint_convex = true;
  const std::size_t stride = std::max<std::size_t>(1, us.size() / 6);
  for (std::size_t i = 0; i < us.size(); i += stride) {
    for (std::size_t j = i + stride; j < us.size(); j += stride) {
      const double x = us[i], y = us[j];
      const double mid = B(0.5 * (x + y));
      const double avg = 0.5 * (B(x) + B(y));
      if (mid > avg + tol * std::max(1.0, std::abs(avg))) {
        rep.phi_midpoint_convex = false;
      }
    }
  }

  // Phi must be phi-type: zero at the origin, non-negative, non-decreasing.
  rep.phi_type_ok = B(0.0) == 0.0;
  double prev = 0.0;
  for (double phi_b : phis) {
    if (phi_b < prev - tol || phi_b < -tol) rep.phi_type_ok = false;
    prev = phi_b;
  }

  // Scaling ratio basef(u^{1/s})/u must be non-decreasing.
  rep.ratio_monotone = true;
  try {
    double prev_ratio = -std::numeric_limits<double>::infinity();
    for (double u : us) {
      const double ratio = basef(std::pow(u, 1.0 / ctx.s)) / u;
      if (ratio < prev_ratio - tol * std::max(1.0, std::abs(prev_ratio))) {
        rep.ratio_monotone = false;
      }
      prev_ratio = ratio;
    }
  } catch (const EvalError&) {
    rep.ratio_monotone = false;
  }
  return rep;
}

json SandwichReport::to_json() const {
  json j;
  json rows_j = json::array();
  for (const auto& row : rows) {
    json e;
    e["u"] = row.u;
    e["lower"] = row.lower;
    e["phi"] = row.phi;
    e["upper"] = row.upper;
    rows_j.push_back(e);
  }
  j["rows"] = rows_j;
  j["holds"] = holds;
  j["phi_midpoint_convex"] = phi_midpoint_convex;
  j["phi_type_ok"] = phi_type_ok;
  j["ratio_monotone"] = ratio_monotone;
  return j;
}

TheoremReport check_thm37(const FnPtr& f, const AlphaContext& ctx,
                          const SearchBudget& budget) {
  ctx.validate();
  auto r = base_report("thm37", pretty_print(f), ctx);
  add_hyp(r, "s_strictly_inside", ctx.s < 1.0);
  if (ctx.s < 1.0) {
    const auto vf =
        certify(f, ClassKind::gk1, ConvexSense::convex, ctx, budget);
    add_hyp(r, "f_in_first_kind", member(vf));
    const auto pt = phi_type_check(f, ctx);
    add_hyp(r, "f_phi_type", pt.ok());
  } else {
    add_hyp(r, "f_in_first_kind", false);
    add_hyp(r, "f_phi_type", false);
  }

  if (!r.hypotheses_met()) {
    finish(r, false, "not applicable");
    return r;
  }

  const auto sw = sandwich_thm37(f, ctx);
  finish(r, sw.holds && sw.phi_midpoint_convex && sw.phi_type_ok &&
                sw.ratio_monotone,
         std::string("sandwich rows: ") + std::to_string(sw.rows.size()) +
             "; bounds " + (sw.holds ? "hold" : "FAIL") +
             "; Phi midpoint-convex: " +
             (sw.phi_midpoint_convex ? "yes" : "no") + "; Phi phi-type: " +
             (sw.phi_type_ok ? "yes" : "no") + "; scaling ratio monotone: " +
             (sw.ratio_monotone ? "yes" : "no"));
  return r;
}

// ---------------------------------------------------------------------------

std::vector<TheoremReport> run_theorem_suite(const AlphaContext& ctx,
                                             const SearchBudget& budget) {
  ctx.validate();
  std::vector<TheoremReport> out;
  const std::string S = num_str(ctx.s);
  const std::string Sh = num_str(ctx.s / 2);
  const auto Pex = [&ctx](const std::string& text) {
    return parse(text, ctx);
  };
  const std::string ex41_member =
      "pw(u == 0 -> fb(1); else -> fb(1)*mono(s) + fb(1))";

  out.push_back(check_thm31a(Pex(ex41_member), ctx, budget));
  out.push_back(check_thm31b(Pex("mono(s)"), ctx, budget));

  const double sv = ctx.s;
  const BaseFn cf = [sv](double u) { return std::pow(u, sv); };
  const BaseFn cg = [sv](double u) { return 2.0 * std::pow(u, sv) + 1.0; };
  out.push_back(check_thm32(cf, cg, BivariateOp::sum, ctx, budget));
  out.push_back(check_thm32(cf, cg, BivariateOp::max, ctx, budget));

  out.push_back(check_thm33a(Pex("mono(s)"), ctx, budget));
  out.push_back(check_thm33a(Pex(ex41_member), ctx, budget));
  out.push_back(check_thm33b(Pex("mono(s)"), ctx, budget));
  out.push_back(check_thm33b(Pex(ex41_member), ctx, budget));

  out.push_back(check_thm34a(Pex("mono(s)"), ctx, budget));
  out.push_back(check_thm34b(Pex("mono(" + S + ")"), ctx.s / 2, ctx, budget));
  out.push_back(check_thm34c(
      Pex("pw(u == 0 -> fb(0); else -> fb(1)*mono(" + S + ") + fb(-1))"),
      ctx.s / 2, ctx, budget));

  out.push_back(check_thm35(Pex("fb(1)"), ctx, budget));
  out.push_back(
      check_thm35(Pex("pw(u <= 1 -> fb(1); else -> fb(2))"), ctx, budget));
  out.push_back(check_thm35(Pex("mono(s) + fb(2)"), ctx, budget));

  out.push_back(check_thm36a(Pex("mono(" + S + ")"), ctx.s,
                             parse_scalar("pow(u, 0.75)"), 0.75, ctx,
                             budget));
  out.push_back(check_thm36b(Pex("mono(" + S + ")"), ctx.s,
                             Pex("mono(" + Sh + ") + fb(1)"), ctx.s / 2, ctx,
                             budget));

  out.push_back(check_remark34(Pex("mono(1)"), Pex("mono(2)"), ctx, budget));

  out.push_back(check_cor31(Pex("mono(2)"), ctx, budget));
  out.push_back(check_cor32(Pex("mono(s)"), ctx, budget));

  out.push_back(check_thm37(Pex("mono(1)"), ctx, budget));
  out.push_back(check_thm37(Pex("mono(s)"), ctx, budget));
  return out;
}

json suite_json(const std::vector<TheoremReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

std::string format_table(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os << "id        conclusion        instance\n";
  os << "--------  ----------------  ----------------------------------\n";
  for (const auto& r : reports) {
    std::string id = r.theorem_id;
    id.resize(8, ' ');
    std::string concl = to_string(r.conclusion);
    concl.resize(16, ' ');
    os << id << "  " << concl << "  " << r.instance << "\n";
  }
  return os.str();
}

}  // namespace fsc
