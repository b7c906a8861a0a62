#include "fsc/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace fsc {

namespace {

const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    default: return "two_sided";
  }
}

struct TailEstimate {
  double limit = std::numeric_limits<double>::quiet_NaN();
  double conv = std::numeric_limits<double>::infinity();
};

// Aitken delta-squared acceleration of a sequence with a geometric error
// tail.  Triples without usable contraction fall back to the raw term, so a
// flat sequence settles to its last value with zero estimated change.
// Shrinking steps eventually amplify cancellation noise, so the estimate is
// read off the most settled consecutive pair rather than the last one.
TailEstimate settle(const std::vector<double>& q, bool extrapolate) {
  TailEstimate out;
  const std::size_t m = q.size();
  if (m == 0) return out;
  out.limit = q[m - 1];
  if (m == 1) return out;
  out.conv = std::abs(q[m - 1] - q[m - 2]);
  if (!extrapolate || m == 2) return out;

  std::vector<double> acc(m);
  acc[0] = q[0];
  acc[1] = q[1];
  for (std::size_t j = 2; j < m; ++j) {
    const double d1 = q[j] - q[j - 1];
    const double d0 = q[j - 1] - q[j - 2];
    const double denom = d1 - d0;
    const double noise =
        1e-15 * (std::abs(q[j]) + std::abs(q[j - 1]) + std::abs(q[j - 2]));
    const bool usable = std::abs(d1) > noise && std::abs(d1) < std::abs(d0) &&
                        std::abs(denom) > 1e-3 * std::abs(d1);
    acc[j] = usable ? q[j] - d1 * d1 / denom : q[j];
  }
  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t j = 2; j < m; ++j) {
    if (!std::isfinite(acc[j]) || !std::isfinite(acc[j - 1])) continue;
    const double dj = std::abs(acc[j] - acc[j - 1]);
    if (dj < best) {
      best = dj;
      found = true;
    }
  }
  if (!found) return out;
  // Rounding noise grows again past the settled region and can repeat values
  // bitwise, so among the near-minimal pairs the earliest one is the
  // trustworthy estimate.
  for (std::size_t j = 2; j < m; ++j) {
    if (!std::isfinite(acc[j]) || !std::isfinite(acc[j - 1])) continue;
    const double dj = std::abs(acc[j] - acc[j - 1]);
    if (dj <= 2.0 * best) {
      out.limit = acc[j];
      out.conv = dj;
      break;
    }
  }
  return out;
}

bool settled(const TailEstimate& fit) {
  return std::isfinite(fit.limit) &&
         fit.conv <= 1e-6 * std::max(1.0, std::abs(fit.limit));
}

// (base f(x0+h) - base f(x0)) / h via the field operations; h is exact and
// nonzero here, so the division tolerance is bypassed.
double quotient_base(const FractalFn& f, const FractalScalar& fx0, double x0,
                     double h) {
  const FractalScalar num = field_op(FieldOp::sub, f(x0 + h), fx0);
  return field_op(FieldOp::div, num, FractalScalar::from_base(h), 0.0).base();
}

FractalScalar midpoint_sum(const FractalFn& f, double lo, double hi, int n) {
  const double dt = (hi - lo) / n;
  const FractalScalar step = FractalScalar::from_base(dt);
  FractalScalar acc = FractalScalar::from_base(0.0);
  for (int i = 0; i < n; ++i) {
    const double t = lo + (i + 0.5) * dt;
    acc = field_op(FieldOp::add, acc, field_op(FieldOp::mul, f(t), step));
  }
  return acc;
}

}  // namespace

FractalFn as_fn(const FnPtr& f, const AlphaContext& ctx) {
  return [f, ctx](double u) { return evaluate(f, u, ctx); };
}

// ---------------------------------------------------------------------------
// derivative
// ---------------------------------------------------------------------------

DerivativeResult lf_derivative(const FractalFn& f, double x0,
                               const AlphaContext& ctx,
                               const LimitScheme& scheme) {
  ctx.validate();
  if (!(x0 >= 0.0)) throw EvalError("lf_derivative: x0 must be >= 0");
  if (scheme.terms < 1 || !(scheme.h0 > 0.0) || !(scheme.ratio > 0.0) ||
      !(scheme.ratio < 1.0))
    throw EvalError("lf_derivative: bad limit scheme");

  const FractalScalar fx0 = f(x0);
  const double gam = gamma(1.0 + ctx.alpha);

  Side side = scheme.side;
  if (side != Side::right && x0 - scheme.h0 < 0.0) {
    if (side == Side::left)
      throw EvalError("lf_derivative: left window leaves the domain");
    side = Side::right;
  }

  const auto run = [&](Side sd) {
    std::vector<double> vals;
    vals.reserve(scheme.terms);
    double h = scheme.h0;
    for (int k = 0; k < scheme.terms; ++k, h *= scheme.ratio) {
      if (x0 + h == x0) break;  // step vanished in double precision
      double q = 0.0;
      switch (sd) {
        case Side::right: q = quotient_base(f, fx0, x0, h); break;
        case Side::left: q = quotient_base(f, fx0, x0, -h); break;
        default:
          q = 0.5 * (quotient_base(f, fx0, x0, h) +
                     quotient_base(f, fx0, x0, -h));
          break;
      }
      vals.push_back(
          scalar_scale(gam, FractalScalar::from_base(q), ctx).value(ctx.alpha));
    }
    return vals;
  };

  std::vector<double> v;
  try {
    v = run(side);
  } catch (const EvalError&) {
    if (side != Side::two_sided) throw;
    side = Side::right;  // evaluation failed off to the left: fall back
    v = run(side);
  }
  if (v.empty()) throw EvalError("lf_derivative: no usable steps near x0");

  const TailEstimate fit = settle(v, scheme.extrapolate);
  DerivativeResult res;
  res.value = fit.limit;
  res.base = FractalScalar::from_value(fit.limit, ctx.alpha).base();
  res.alpha = ctx.alpha;
  res.convergence_estimate = fit.conv;
  res.terms_used = static_cast<int>(v.size());
  res.side_used = side;
  res.converged = settled(fit);
  return res;
}

DerivativeResult lf_derivative(const FnPtr& f, double x0,
                               const AlphaContext& ctx,
                               const LimitScheme& scheme) {
  return lf_derivative(as_fn(f, ctx), x0, ctx, scheme);
}

// ---------------------------------------------------------------------------
// integral
// ---------------------------------------------------------------------------

IntegralResult lf_integral(const FractalFn& f, double a, double b,
                           const AlphaContext& ctx, const MeshSpec& mesh) {
  ctx.validate();
  if (!(a >= 0.0) || !(b >= 0.0))
    throw EvalError("lf_integral: bounds must be >= 0");
  if (mesh.n_intervals < 1 || mesh.refinement_levels < 1)
    throw EvalError("lf_integral: bad mesh");

  IntegralResult res;
  res.alpha = ctx.alpha;
  res.a = a;
  res.b = b;
  if (a == b) {  // empty interval: exactly 0^alpha
    res.converged = true;
    res.convergence_estimate = 0.0;
    return res;
  }

  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const bool flip = b < a;
  const double inv_gamma = 1.0 / gamma(1.0 + ctx.alpha);

  double prev = 0.0;
  int n = mesh.n_intervals;
  for (int level = 0; level < mesh.refinement_levels; ++level, n *= 2) {
    FractalScalar sum = midpoint_sum(f, lo, hi, n);
    if (flip) sum = FractalScalar::from_base(-sum.base());
    const FractalScalar scaled = scalar_scale(inv_gamma, sum, ctx);
    res.base = scaled.base();
    res.value = scaled.value(ctx.alpha);
    res.n_used = n;
    res.levels_used = level + 1;
    if (level > 0) {
      res.convergence_estimate =
          std::abs(res.value - prev) / std::max(1.0, std::abs(res.value));
      if (res.convergence_estimate <= mesh.rel_change_stop) {
        res.converged = true;
        break;
      }
    }
    prev = res.value;
  }
  return res;
}

IntegralResult lf_integral(const FnPtr& f, double a, double b,
                           const AlphaContext& ctx, const MeshSpec& mesh) {
  return lf_integral(as_fn(f, ctx), a, b, ctx, mesh);
}

// ---------------------------------------------------------------------------
// continuity probe
// ---------------------------------------------------------------------------

ContinuityReport continuity_probe(const FractalFn& f, double x0,
                                  const AlphaContext& ctx,
                                  const ContinuitySpec& spec) {
  ctx.validate();
  if (!(x0 >= 0.0)) throw EvalError("continuity_probe: x0 must be >= 0");
  if (!(spec.delta0 > 0.0) || !(spec.shrink > 0.0) || !(spec.shrink < 1.0) ||
      spec.max_levels < 1 || spec.eps_grid.empty())
    throw EvalError("continuity_probe: bad spec");

  const FractalScalar fx0 = f(x0);
  const double b0 = fx0.base();
  const double v0 = fx0.value(ctx.alpha);
  // Below this width, x0 +/- delta collapses onto x0 itself.
  const double floor_delta =
      x0 > 0.0 ? 8.0 * std::numeric_limits<double>::epsilon() * x0 : 0.0;
  static constexpr double kOffsets[] = {1.0, 0.75, 0.5, 0.25, 0.1, 0.01};

  ContinuityReport rep;
  rep.x0 = x0;
  double delta = spec.delta0;
  for (int j = 0; j < spec.max_levels; ++j, delta *= spec.shrink) {
    if (delta <= floor_delta || delta == 0.0) break;
    ContinuityLevel lvl;
    lvl.delta = delta;
    bool probed = false;
    for (double g : kOffsets) {
      for (int sgn : {1, -1}) {
        const double x = x0 + sgn * g * delta;
        if (x < 0.0 || x == x0) continue;
        probed = true;
        try {
          const FractalScalar fx = f(x);
          lvl.sup_base_diff =
              std::max(lvl.sup_base_diff, std::abs(fx.base() - b0));
          lvl.sup_value_diff =
              std::max(lvl.sup_value_diff, std::abs(fx.value(ctx.alpha) - v0));
        } catch (const EvalError&) {
          // f undefined arbitrarily close to x0: treat as an obstruction
          lvl.sup_base_diff = std::numeric_limits<double>::infinity();
          lvl.sup_value_diff = std::numeric_limits<double>::infinity();
        }
      }
    }
    if (!probed) break;
    rep.levels.push_back(lvl);
  }
  if (rep.levels.empty())
    throw EvalError("continuity_probe: no representable neighbourhood of x0");

  // The ball of radius delta_j contains every deeper probe, so the sup over
  // it is estimated by the suffix maximum of the per-level sups.
  const std::size_t n = rep.levels.size();
  std::vector<double> suffix_base(n);
  std::vector<double> suffix_value(n);
  double mb = 0.0;
  double mv = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    mb = std::max(mb, rep.levels[i].sup_base_diff);
    mv = std::max(mv, rep.levels[i].sup_value_diff);
    suffix_base[i] = mb;
    suffix_value[i] = mv;
  }

  rep.continuous = true;
  for (double eps : spec.eps_grid) {
    bool satisfied = false;
    for (std::size_t i = 0; i < n && !satisfied; ++i)
      satisfied = suffix_base[i] < eps;
    if (!satisfied) {
      rep.continuous = false;
      rep.obstructing_eps = std::max(rep.obstructing_eps, eps);
    }
  }
  rep.base_jump = suffix_base[n - 1];
  rep.value_jump = suffix_value[n - 1];
  return rep;
}

ContinuityReport continuity_probe(const FnPtr& f, double x0,
                                  const AlphaContext& ctx,
                                  const ContinuitySpec& spec) {
  return continuity_probe(as_fn(f, ctx), x0, ctx, spec);
}

// ---------------------------------------------------------------------------
// ratio limits
// ---------------------------------------------------------------------------

RatioLimitResult ratio_limit(const FractalFn& f, const FractalFn& g, double x0,
                             const AlphaContext& ctx,
                             const LimitScheme& scheme) {
  ctx.validate();
  if (!(x0 >= 0.0)) throw EvalError("ratio_limit: x0 must be >= 0");

  RatioLimitResult res;
  res.zero_over_zero = std::abs(f(x0).base()) <= ctx.tol_base &&
                       std::abs(g(x0).base()) <= ctx.tol_base;

  // Direct value-ratio samples along the step sequence (right side).
  std::vector<double> samples;
  double h = scheme.h0;
  for (int k = 0; k < scheme.terms; ++k, h *= scheme.ratio) {
    if (x0 + h == x0) break;
    try {
      const double num = f(x0 + h).value(ctx.alpha);
      const double den = g(x0 + h).value(ctx.alpha);
      if (den == 0.0) continue;
      samples.push_back(num / den);
    } catch (const EvalError&) {
      continue;
    }
  }
  const TailEstimate direct = settle(samples, scheme.extrapolate);
  res.direct_ratio = direct.limit;

  bool deriv_ok = false;
  if (res.zero_over_zero) {
    try {
      const DerivativeResult df = lf_derivative(f, x0, ctx, scheme);
      const DerivativeResult dg = lf_derivative(g, x0, ctx, scheme);
      if (std::isfinite(df.value) && std::isfinite(dg.value) &&
          std::abs(dg.value) > 1e-6 * std::max(1.0, std::abs(df.value))) {
        res.derivative_ratio = df.value / dg.value;
        deriv_ok = df.converged && dg.converged;
      }
    } catch (const EvalError&) {
      // derivative path unavailable; fall through to the direct estimate
    }
  }

  if (deriv_ok) {
    res.value = res.derivative_ratio;
    res.used_derivatives = true;
    res.converged = true;
  } else {
    res.value = direct.limit;
    res.converged = !samples.empty() && settled(direct);
  }
  if (std::isfinite(res.derivative_ratio) && std::isfinite(res.direct_ratio) &&
      !samples.empty()) {
    const double gap = std::abs(res.derivative_ratio - res.direct_ratio) /
                       std::max(1.0, std::abs(res.derivative_ratio));
    res.methods_agree = gap <= 1e-4;
  }
  return res;
}

RatioLimitResult ratio_limit(const FnPtr& f, const FnPtr& g, double x0,
                             const AlphaContext& ctx,
                             const LimitScheme& scheme) {
  return ratio_limit(as_fn(f, ctx), as_fn(g, ctx), x0, ctx, scheme);
}

// ---------------------------------------------------------------------------
// fundamental theorem residual
// ---------------------------------------------------------------------------

FtcResult ftc_residual(const FractalFn& f, double x, const AlphaContext& ctx,
                       const LimitScheme& scheme, const MeshSpec& mesh) {
  ctx.validate();
  if (!(x >= 0.0)) throw EvalError("ftc_residual: x must be >= 0");

  FtcResult res;
  res.x = x;
  res.f_value = f(x).value(ctx.alpha);
  const double gam = gamma(1.0 + ctx.alpha);

  std::vector<double> v;
  v.reserve(scheme.terms);
  bool integrals_ok = true;
  double h = scheme.h0;
  for (int k = 0; k < scheme.terms; ++k, h *= scheme.ratio) {
    if (x + h == x) break;
    const IntegralResult seg = lf_integral(f, x, x + h, ctx, mesh);
    integrals_ok = integrals_ok && seg.converged;
    const FractalScalar quotient =
        field_op(FieldOp::div, seg.element(), FractalScalar::from_base(h), 0.0);
    v.push_back(scalar_scale(gam, quotient, ctx).value(ctx.alpha));
  }
  if (v.empty()) throw EvalError("ftc_residual: no usable steps near x");

  const TailEstimate fit = settle(v, scheme.extrapolate);
  res.derivative_value = fit.limit;
  res.residual =
      std::abs(fit.limit - res.f_value) / std::max(1.0, std::abs(res.f_value));
  res.converged = integrals_ok && settled(fit);
  return res;
}

FtcResult ftc_residual(const FnPtr& f, double x, const AlphaContext& ctx,
                       const LimitScheme& scheme, const MeshSpec& mesh) {
  return ftc_residual(as_fn(f, ctx), x, ctx, scheme, mesh);
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

json DerivativeResult::to_json() const {
  json j;
  j["value"] = value;
  j["base"] = base;
  j["alpha"] = alpha;
  j["converged"] = converged;
  j["convergence_estimate"] = convergence_estimate;
  j["terms_used"] = terms_used;
  j["side"] = side_name(side_used);
  return j;
}

json IntegralResult::to_json() const {
  json j;
  j["value"] = value;
  j["base"] = base;
  j["alpha"] = alpha;
  j["a"] = a;
  j["b"] = b;
  j["converged"] = converged;
  j["convergence_estimate"] = convergence_estimate;
  j["n_used"] = n_used;
  j["levels_used"] = levels_used;
  return j;
}

json ContinuityReport::to_json() const {
  json j;
  j["x0"] = x0;
  j["continuous"] = continuous;
  j["obstructing_eps"] = obstructing_eps;
  j["base_jump"] = base_jump;
  j["value_jump"] = value_jump;
  j["levels_probed"] = levels.size();
  j["deepest_delta"] = levels.empty() ? 0.0 : levels.back().delta;
  return j;
}

json RatioLimitResult::to_json() const {
  json j;
  j["value"] = value;
  j["derivative_ratio"] = derivative_ratio;
  j["direct_ratio"] = direct_ratio;
  j["zero_over_zero"] = zero_over_zero;
  j["used_derivatives"] = used_derivatives;
  j["methods_agree"] = methods_agree;
  j["converged"] = converged;
  return j;
}

json FtcResult::to_json() const {
  json j;
  j["x"] = x;
  j["derivative_value"] = derivative_value;
  j["f_value"] = f_value;
  j["residual"] = residual;
  j["converged"] = converged;
  return j;
}

}  // namespace fsc
