// Test-only oracles, written directly from the defining formulas and kept
// independent of the library implementations they are used to check.

#pragma once

#include <cmath>
#include <functional>

namespace oracles {

// tanh-sinh quadrature on (0,1).  Nodes x = 1/(1+exp(-pi*sinh(u))) cluster
// double-exponentially at both endpoints, so integrable endpoint
// singularities converge cleanly.  log_f returns log of the integrand.
inline double tanh_sinh_01_log(const std::function<double(double, double)>& log_f) {
  auto log_node = [](double y) {
    // log(1/(1+exp(-y))) without cancellation
    return y > 0.0 ? -std::log1p(std::exp(-y)) : y - std::log1p(std::exp(y));
  };
  double prev = 0.0;
  double result = 0.0;
  for (int level = 2; level <= 12; ++level) {
    double h = std::ldexp(1.0, -level);
    long kmax = static_cast<long>(6.5 / h);
    double sum = 0.0;
    for (long k = -kmax; k <= kmax; ++k) {
      double u = k * h;
      double y = M_PI * std::sinh(u);
      double lx = log_node(y);
      double l1mx = log_node(-y);
      double x = std::exp(lx);
      double logw = std::log(M_PI * std::cosh(u)) + lx + l1mx;
      double lf = log_f(x, lx);
      if (lf + logw < -745.0) continue;
      sum += std::exp(lf + logw);
    }
    result = sum * h;
    if (level > 4 && std::fabs(result - prev) <= 1e-15 * std::fabs(result))
      break;
    prev = result;
  }
  return result;
}

// exp-sinh quadrature on (1, +inf) for integrands with exponential decay.
inline double exp_sinh_1inf_log(const std::function<double(double)>& log_f) {
  double prev = 0.0;
  double result = 0.0;
  for (int level = 2; level <= 12; ++level) {
    double h = std::ldexp(1.0, -level);
    long kmax = static_cast<long>(5.0 / h);
    double sum = 0.0;
    for (long k = -kmax; k <= kmax; ++k) {
      double u = k * h;
      double e = M_PI * std::sinh(u);
      if (e > 8.0) {  // x - 1 = exp(e) > 2980; cut once the tail underflows
        double x = 1.0 + std::exp(e);
        if (log_f(x) + std::log(M_PI * std::cosh(u)) + e < -745.0) break;
      }
      double x = 1.0 + std::exp(e);
      double logw = std::log(M_PI * std::cosh(u)) + e;
      double lf = log_f(x);
      if (lf + logw < -745.0) continue;
      sum += std::exp(lf + logw);
    }
    result = sum * h;
    if (level > 4 && std::fabs(result - prev) <= 1e-15 * std::fabs(result))
      break;
    prev = result;
  }
  return result;
}

// Gamma(t) by quadrature of int_0^inf x^(t-1) e^(-x) dx.  The head over
// (0,1) is computed after the substitution w = x^t, which removes the
// endpoint singularity uniformly in t:
//   int_0^1 x^(t-1) e^(-x) dx = (1/t) int_0^1 exp(-w^(1/t)) dw
inline double gamma_integral(double t) {
  double head = tanh_sinh_01_log([t](double /*w*/, double log_w) {
    return -std::exp(log_w / t);
  });
  double tail = exp_sinh_1inf_log([t](double x) {
    return (t - 1.0) * std::log(x) - x;
  });
  return head / t + tail;
}

// Plain midpoint Riemann sum of a real function, fixed fine mesh.
inline double riemann_midpoint(const std::function<double(double)>& f, double a,
                               double b, long n) {
  double h = (b - a) / static_cast<double>(n);
  double sum = 0.0;
  for (long j = 0; j < n; ++j) sum += f(a + (j + 0.5) * h);
  return sum * h;
}

}  // namespace oracles
