// Core arithmetic of the fractal real line R^alpha (0 < alpha <= 1).
//
// An element a^alpha is stored canonically by its base a.  Addition and
// subtraction act additively on bases, multiplication and division
// multiplicatively, which makes the seven arithmetic laws of the set exact
// in base space.  The derived value sign(a)|a|^alpha is computed on demand.

#pragma once

namespace fsc {

inline constexpr double kDefaultTolBase = 1e-12;
inline constexpr double kDefaultTolViolation = 1e-9;
inline constexpr double kCompareAbsFloor = 1e-300;

// Parameters shared by every computation: the fractal order alpha and the
// convexity order s, both in (0,1], plus the two working tolerances
// (tol_base for base-space equality, tol_violation for inequality margins).
struct AlphaContext {
  double alpha = 0.5;
  double s = 0.5;
  double tol_base = kDefaultTolBase;
  double tol_violation = kDefaultTolViolation;

  void validate() const;  // throws std::domain_error on bad parameters
};

// One element a^alpha of R^alpha, held by its base a.
class FractalScalar {
 public:
  FractalScalar() = default;

  static FractalScalar from_base(double b) { return FractalScalar(b); }
  static FractalScalar from_value(double v, double alpha);

  double base() const { return base_; }
  // sign(base) * |base|^alpha
  double value(double alpha) const;

 private:
  explicit FractalScalar(double b) : base_(b) {}
  double base_ = 0.0;
};

enum class ScalarMode { base, value };

FractalScalar make_scalar(ScalarMode mode, double x, const AlphaContext& ctx);

enum class FieldOp { add, sub, mul, div };

// div throws std::domain_error when |rhs.base| <= tol_base.
FractalScalar field_op(FieldOp op, FractalScalar lhs, FractalScalar rhs,
                       double tol_base = kDefaultTolBase);

inline FractalScalar operator+(FractalScalar a, FractalScalar b) {
  return FractalScalar::from_base(a.base() + b.base());
}
inline FractalScalar operator-(FractalScalar a, FractalScalar b) {
  return FractalScalar::from_base(a.base() - b.base());
}
inline FractalScalar operator*(FractalScalar a, FractalScalar b) {
  return FractalScalar::from_base(a.base() * b.base());
}

// Bare real prefactor (e.g. Gamma(1+alpha)) acting on the value of x:
// result value = c * value(x).
FractalScalar scalar_scale(double c, FractalScalar x, const AlphaContext& ctx);

enum class Order { less, equal, greater };

// Total order by base with a relative equality band (absolute floor
// kCompareAbsFloor so subnormal noise compares equal to zero).
Order compare(FractalScalar lhs, FractalScalar rhs,
              double tol_base = kDefaultTolBase);

inline bool leq(FractalScalar lhs, FractalScalar rhs,
                double tol_base = kDefaultTolBase) {
  return compare(lhs, rhs, tol_base) != Order::greater;
}

// Gamma(t) for t > 0, relative error <= 1e-12 on (0, 50].
double gamma(double t);

}  // namespace fsc
