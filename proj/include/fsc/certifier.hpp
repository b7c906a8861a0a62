// Falsification-oriented certification of generalized s-convexity.
//
// A function f: R+ -> R^alpha is tested against the defining inequality
//     f(l1 u + l2 v)  <=  l1^{s alpha} f(u) + l2^{s alpha} f(v)
// where the weight constraint distinguishes the two classes:
//     gk1:  l1^s + l2^s = 1        gk2:  l1 + l2 = 1
// (relaxed variants allow the constraint sum <= 1, including the (0,0)
// corner).  Because the order on R^alpha is the base order, the inequality
// is equivalent to the same statement about the base curve, and the margin
// is computed there.  The classical real-valued classes are certified by
// the identical arithmetic on a plain base curve, so verdicts and witnesses
// transfer between the two worlds verbatim, double for double.
//
// Verdicts are three-valued: a structural rule can prove membership, the
// search can exhibit a violation witness, and otherwise the search reports
// only that no violation was found within the budget.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fsc/algebra.hpp"
#include "fsc/expr.hpp"

namespace fsc {

enum class ClassKind { gk1, gk2 };
enum class ConvexSense { convex, concave };

// A real base curve u >= 0 -> base f(u).
using BaseFn = std::function<double(double)>;

struct LambdaPair {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

// Weights parametrized by t in [0,1] on the constraint surface with budget
// r in [0,1]: gk1 gives (r t)^{1/s}, (r (1-t))^{1/s} so l1^s + l2^s = r;
// gk2 gives r t, r (1-t) so l1 + l2 = r.  r = 1 is the strict constraint.
LambdaPair constraint_pair(ClassKind kind, double t, double s, double r = 1.0);

// Base-space defect of the defining inequality at (u, v, l1, l2): positive
// values witness a violation for the convex sense (sign flips for concave).
double inequality_margin(const BaseFn& basef, double u, double v,
                         double lambda1, double lambda2, double s,
                         ConvexSense sense);

struct Witness {
  double u = 0.0;
  double v = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double margin = 0.0;

  json to_json() const;
};

// Recomputes the margin of a stored witness through the same arithmetic.
double replay_margin(const BaseFn& basef, const Witness& w, double s,
                     ConvexSense sense);

struct SearchBudget {
  int grid_n = 64;     // u/v resolution: {0} plus log-spaced points
  int t_grid_n = 128;  // weight-parameter resolution
  long long random_trials = 100000;
  int refine_steps = 40;
  std::uint64_t seed = 1;
  double u_max = 10.0;
  int threads = 1;  // never affects the result, only the wall clock
  // Extra u/v probe points appended after the log grid (finite, >= 0).
  // Violations of nearly-everywhere-convex functions can live in slivers
  // around discontinuities that no generic grid density reaches; callers
  // that know such landmarks list them here.  The field is part of the
  // budget so the same probes drive generalized and classical searches.
  std::vector<double> focus_points;
};

// Suggested focus points for a function with jumps: for every piecewise
// guard threshold c, the points {max(0, c - 1e-9), c, c + 1e-9}, sorted
// and deduplicated.  Empty for expressions without guards.
std::vector<double> breakpoints(const FnPtr& f);

enum class CertStatus { proven_member, no_violation_found, violation };

struct Verdict {
  CertStatus status = CertStatus::no_violation_found;
  ClassKind kind = ClassKind::gk1;
  ConvexSense sense = ConvexSense::convex;
  bool relaxed = false;
  double s = 0.0;
  double alpha = 0.0;
  std::string rule_id;             // set when a structural rule decided
  std::optional<Witness> witness;  // set for violations
  long long evaluations = 0;       // margin probes performed by the search
  double max_margin = 0.0;         // largest margin seen
  SearchBudget budget;

  json to_json() const;
};

// Certifies f against the strict constraint.  With use_patterns set,
// structural membership rules run first; the fallback is a deterministic
// search (full grid scan, seeded random trials in fixed blocks, local
// refinement of the best candidate).  Identical results for any thread
// count: random blocks have their own seeded generators and results merge
// in block order with a lexicographic tie-break.
Verdict certify(const FnPtr& f, ClassKind kind, ConvexSense sense,
                const AlphaContext& ctx, const SearchBudget& budget = {},
                bool use_patterns = true);

// Same, with the weight constraint relaxed to sum <= 1 (the search covers
// budgets r in [0,1] including the exact (0,0) corner).
Verdict certify_relaxed(const FnPtr& f, ClassKind kind, ConvexSense sense,
                        const AlphaContext& ctx,
                        const SearchBudget& budget = {},
                        bool use_patterns = true);

// The classical real-valued certifier: the same search over a plain base
// curve (no structural rules, since there is no expression tree to inspect).
Verdict certify_classical(const BaseFn& basef, ClassKind kind,
                          ConvexSense sense, const AlphaContext& ctx,
                          const SearchBudget& budget = {},
                          bool relaxed = false);

const char* to_string(CertStatus status);
const char* to_string(ClassKind kind);
const char* to_string(ConvexSense sense);

}  // namespace fsc
