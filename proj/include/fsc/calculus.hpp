// Local fractional calculus on R^alpha: the order-alpha derivative and
// integral, a continuity probe, ratio limits, and a fundamental-theorem
// residual check.
//
// The derivative of f at x0 is the limit of
//     Gamma(1+alpha) * (f(x) - f(x0)) / (x - x0)^alpha
// taken along a geometric step sequence with Aitken extrapolation of the
// tail.  The integral is the limit of midpoint sums
//     (1/Gamma(1+alpha)) * sum_i f(t_i) * (dt)^alpha
// under mesh doubling.  Both are assembled from the field operations, so
// every intermediate quantity is a legal element of R^alpha.

#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "fsc/algebra.hpp"
#include "fsc/expr.hpp"

namespace fsc {

// A curve t >= 0 -> x(t) in R^alpha.
using FractalFn = std::function<FractalScalar(double)>;

// Wraps an expression tree as a callable curve under a fixed context.
FractalFn as_fn(const FnPtr& f, const AlphaContext& ctx);

// ---------------------------------------------------------------------------
// schemes
// ---------------------------------------------------------------------------

struct MeshSpec {
  int n_intervals = 4096;      // starting midpoint-mesh resolution
  int refinement_levels = 4;   // mesh doublings tried before giving up
  double rel_change_stop = 1e-8;
};

enum class Side { two_sided, left, right };

struct LimitScheme {
  double h0 = 1e-2;    // first step size
  double ratio = 0.5;  // geometric shrink factor between steps
  int terms = 20;      // number of step sizes probed
  bool extrapolate = true;
  Side side = Side::two_sided;  // two_sided falls back to right at the origin
};

// ---------------------------------------------------------------------------
// results
// ---------------------------------------------------------------------------

struct DerivativeResult {
  double value = 0.0;  // alpha-value of the derivative element
  double base = 0.0;   // its base
  double alpha = 0.0;
  double convergence_estimate = std::numeric_limits<double>::infinity();
  int terms_used = 0;
  Side side_used = Side::two_sided;
  bool converged = false;

  FractalScalar element() const { return FractalScalar::from_base(base); }
  json to_json() const;
};

struct IntegralResult {
  double value = 0.0;
  double base = 0.0;
  double alpha = 0.0;
  double a = 0.0;
  double b = 0.0;
  int n_used = 0;       // finest mesh evaluated
  int levels_used = 0;  // refinement levels evaluated
  double convergence_estimate = std::numeric_limits<double>::infinity();
  bool converged = false;

  FractalScalar element() const { return FractalScalar::from_base(base); }
  json to_json() const;
};

struct ContinuityLevel {
  double delta = 0.0;
  double sup_base_diff = 0.0;   // max |base f(x) - base f(x0)|, |x-x0| in (0, delta]
  double sup_value_diff = 0.0;  // same in value space
};

struct ContinuityReport {
  double x0 = 0.0;
  bool continuous = false;
  // Largest probed epsilon for which no delta-neighbourhood keeps the base
  // oscillation below epsilon; 0 when continuous.
  double obstructing_eps = 0.0;
  double base_jump = 0.0;   // persistent base-space gap estimate
  double value_jump = 0.0;  // the same gap measured on values
  std::vector<ContinuityLevel> levels;

  json to_json() const;
};

struct ContinuitySpec {
  double delta0 = 0.5;
  double shrink = 0.5;
  int max_levels = 500;
  std::vector<double> eps_grid{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
};

struct RatioLimitResult {
  double value = std::numeric_limits<double>::quiet_NaN();  // limit of value(f)/value(g)
  double derivative_ratio = std::numeric_limits<double>::quiet_NaN();
  double direct_ratio = std::numeric_limits<double>::quiet_NaN();
  bool zero_over_zero = false;
  bool used_derivatives = false;  // which estimate `value` came from
  bool methods_agree = true;  // false when both paths exist and differ > 1e-4
  bool converged = false;

  json to_json() const;
};

struct FtcResult {
  double x = 0.0;
  double derivative_value = 0.0;  // D^alpha of the running integral, at x
  double f_value = 0.0;
  double residual = 0.0;  // |derivative_value - f_value| / max(1, |f_value|)
  bool converged = false;

  json to_json() const;
};

// ---------------------------------------------------------------------------
// operators
// ---------------------------------------------------------------------------

DerivativeResult lf_derivative(const FractalFn& f, double x0,
                               const AlphaContext& ctx,
                               const LimitScheme& scheme = {});
DerivativeResult lf_derivative(const FnPtr& f, double x0,
                               const AlphaContext& ctx,
                               const LimitScheme& scheme = {});

// Oriented: lf_integral(f, a, b) = -lf_integral(f, b, a); a == b gives 0^alpha.
IntegralResult lf_integral(const FractalFn& f, double a, double b,
                           const AlphaContext& ctx, const MeshSpec& mesh = {});
IntegralResult lf_integral(const FnPtr& f, double a, double b,
                           const AlphaContext& ctx, const MeshSpec& mesh = {});

// Samples shrinking neighbourhoods of x0 and reports whether the base
// oscillation can be pushed under every epsilon on the grid.  Evaluation
// failure at a probe point counts as an obstruction.
ContinuityReport continuity_probe(const FractalFn& f, double x0,
                                  const AlphaContext& ctx,
                                  const ContinuitySpec& spec = {});
ContinuityReport continuity_probe(const FnPtr& f, double x0,
                                  const AlphaContext& ctx,
                                  const ContinuitySpec& spec = {});

// Limit of the value ratio f(x)/g(x) as x -> x0.  For 0/0 forms the primary
// estimate is the ratio of the order-alpha derivatives, cross-checked
// against direct samples along the step sequence.
RatioLimitResult ratio_limit(const FractalFn& f, const FractalFn& g, double x0,
                             const AlphaContext& ctx,
                             const LimitScheme& scheme = {});
RatioLimitResult ratio_limit(const FnPtr& f, const FnPtr& g, double x0,
                             const AlphaContext& ctx,
                             const LimitScheme& scheme = {});

// Differentiates the running integral of f at x, assembling each quotient
// from the small-interval integral over [x, x+h] (interval additivity) so
// no large-sum cancellation enters.  Residual compares against value(f(x)).
FtcResult ftc_residual(const FractalFn& f, double x, const AlphaContext& ctx,
                       const LimitScheme& scheme = {},
                       const MeshSpec& mesh = MeshSpec{256, 2, 1e-8});
FtcResult ftc_residual(const FnPtr& f, double x, const AlphaContext& ctx,
                       const LimitScheme& scheme = {},
                       const MeshSpec& mesh = MeshSpec{256, 2, 1e-8});

}  // namespace fsc
