// Executable checks of the structural results about the generalized
// s-convexity classes.  Each check instantiates one statement on concrete
// functions: it first verifies the hypotheses numerically (certification,
// sampled monotonicity, limits at the origin), then tests the conclusion by
// independent search with the structural shortcut rules disabled, so a
// conclusion can never be confirmed by the same rule that motivated it.
//
// A report separates three outcomes: the conclusion held, the conclusion
// was falsified (a genuine counterexample to the implication), or a
// hypothesis failed, in which case the statement makes no claim and the
// conclusion was not judged.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fsc/algebra.hpp"
#include "fsc/calculus.hpp"
#include "fsc/certifier.hpp"
#include "fsc/expr.hpp"

namespace fsc {

enum class ConclusionStatus { holds, falsified, hypothesis_unmet };

struct HypothesisCheck {
  std::string name;
  bool satisfied = false;
};

struct TheoremReport {
  std::string theorem_id;
  std::string instance;  // human-readable description of the functions used
  double s = 0.0;        // the s the conclusion was certified at
  double alpha = 0.0;
  std::vector<HypothesisCheck> hypotheses;
  ConclusionStatus conclusion = ConclusionStatus::hypothesis_unmet;
  std::string details;

  bool hypotheses_met() const;
  json to_json() const;
};

// Membership in the first kind forces monotone growth away from the origin,
// a one-sided origin comparison f(0+) <= f(0), and the scaling inequality
// f(t u) <= f(u) for t in [2^{1 - 1/s}, 1].
TheoremReport check_thm31a(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget = {});

// Membership in the second kind forces f >= 0^alpha pointwise.
TheoremReport check_thm31b(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget = {});

// Two classical s-convex curves combined through a bivariate map that is
// generalized convex and non-decreasing in each slot land in the first
// generalized class.  sum and max satisfy the bivariate hypothesis; product
// does not (kept available as a negative control).
enum class BivariateOp { sum, max, product };

TheoremReport check_thm32(const BaseFn& f, const BaseFn& g, BivariateOp op,
                          const AlphaContext& ctx,
                          const SearchBudget& budget = {});

// The weight constraint can be relaxed to a sub-budget exactly when the
// origin value allows it: first kind iff f(0) <= 0^alpha, second kind iff
// f(0) = 0^alpha.  The check compares the origin prediction against an
// actual relaxed search.
TheoremReport check_thm33a(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget = {});
TheoremReport check_thm33b(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget = {});

// Transfer between the classes and down the s scale:
//  (a) second kind + f(0) = 0^alpha  =>  first kind at the same s;
//  (b) second kind at s2 + f(0) = 0^alpha  =>  second kind at s1 <= s2;
//  (c) first kind at s2 + f(0) <= 0^alpha  =>  first kind at s1 <= s2.
TheoremReport check_thm34a(const FnPtr& f, const AlphaContext& ctx,
                           const SearchBudget& budget = {});
TheoremReport check_thm34b(const FnPtr& f, double s1, const AlphaContext& ctx,
                           const SearchBudget& budget = {});
TheoremReport check_thm34c(const FnPtr& f, double s1, const AlphaContext& ctx,
                           const SearchBudget& budget = {});

// u^{(s/(1-s)) alpha} * p(u) with p non-negative and non-decreasing lies in
// the first kind.  The conclusion is certified with pattern rules off.
TheoremReport check_thm35(const FnPtr& p, const AlphaContext& ctx,
                          const SearchBudget& budget = {});

// Composition and product closure:
//  (a) f in the first kind at s1 (non-decreasing, f(0) <= 0^alpha) composed
//      with a classical first-kind s2 map g >= 0, g(0) = 0, lands at s1*s2;
//  (b) a product of first-kind members at s1 and s2 (non-negative, with an
//      origin-continuity condition) lands at min(s1, s2).
TheoremReport check_thm36a(const FnPtr& f, double s1, const ScalarExprPtr& g,
                           double s2, const AlphaContext& ctx,
                           const SearchBudget& budget = {});
TheoremReport check_thm36b(const FnPtr& f, double s1, const FnPtr& g,
                           double s2, const AlphaContext& ctx,
                           const SearchBudget& budget = {});

// Product of non-negative generalized convex curves (s = 1), both monotone
// in the same direction, stays generalized convex.
TheoremReport check_remark34(const FnPtr& f, const FnPtr& g,
                             const AlphaContext& ctx,
                             const SearchBudget& budget = {});

// phi-type qualification: 0 at the origin, continuous in the fractal sense,
// non-decreasing, non-negative.
struct PhiTypeReport {
  bool origin_zero = false;
  bool continuous = false;
  bool non_decreasing = false;
  bool non_negative = false;

  bool ok() const {
    return origin_zero && continuous && non_decreasing && non_negative;
  }
  json to_json() const;
};

PhiTypeReport phi_type_check(const FnPtr& f, const AlphaContext& ctx);

// Corollaries: a generalized convex phi-type map precomposed with u^s lies
// in the first kind; a second-kind phi-type map postcomposed with a convex
// classical phi-function stays in the second kind.
TheoremReport check_cor31(const FnPtr& phi, const AlphaContext& ctx,
                          const SearchBudget& budget = {});
TheoremReport check_cor32(const FnPtr& f, const AlphaContext& ctx,
                          const SearchBudget& budget = {});

// Enveloping construction: for f in the first kind and phi-type, the curve
// Phi with base  B(u) = integral_0^u  basef(t^{1/s}) / t  dt  satisfies
// f(2^{-1/s} u) <= Phi(u^s) <= f(u).  build_phi returns the base curve B.
std::function<double(double)> build_phi_thm37(const FnPtr& f,
                                              const AlphaContext& ctx);

struct SandwichRow {
  double u = 0.0;
  double lower = 0.0;  // value of f(2^{-1/s} u)
  double phi = 0.0;    // value of Phi(u^s)
  double upper = 0.0;  // value of f(u)
};

struct SandwichReport {
  std::vector<SandwichRow> rows;
  bool holds = false;                // both inequalities at every row
  bool phi_midpoint_convex = false;  // sampled midpoint convexity of B
  bool phi_type_ok = false;          // B(0) = 0, non-decreasing, non-negative
  bool ratio_monotone = false;       // basef(u^{1/s})/u non-decreasing
  json to_json() const;
};

SandwichReport sandwich_thm37(const FnPtr& f, const AlphaContext& ctx,
                              int n_points = 24, double u_max = 4.0);

TheoremReport check_thm37(const FnPtr& f, const AlphaContext& ctx,
                          const SearchBudget& budget = {});

// The default corpus: one or more concrete instances per statement, all of
// which are expected to report `holds`.
std::vector<TheoremReport> run_theorem_suite(const AlphaContext& ctx,
                                             const SearchBudget& budget = {});

json suite_json(const std::vector<TheoremReport>& reports);
std::string format_table(const std::vector<TheoremReport>& reports);

const char* to_string(ConclusionStatus status);

}  // namespace fsc
