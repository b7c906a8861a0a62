#include "fsc/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace fsc {

void AlphaContext::validate() const {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("AlphaContext: alpha must lie in (0,1]");
  if (!(s > 0.0) || s > 1.0)
    throw std::domain_error("AlphaContext: s must lie in (0,1]");
  if (!(tol_base > 0.0) || !(tol_violation > 0.0))
    throw std::domain_error("AlphaContext: tolerances must be positive");
}

FractalScalar FractalScalar::from_value(double v, double alpha) {
  if (v == 0.0) return FractalScalar(0.0);
  double mag = std::pow(std::fabs(v), 1.0 / alpha);
  return FractalScalar(v < 0.0 ? -mag : mag);
}

double FractalScalar::value(double alpha) const {
  if (base_ == 0.0) return 0.0;
  double mag = std::pow(std::fabs(base_), alpha);
  return base_ < 0.0 ? -mag : mag;
}

FractalScalar make_scalar(ScalarMode mode, double x, const AlphaContext& ctx) {
  return mode == ScalarMode::base ? FractalScalar::from_base(x)
                                  : FractalScalar::from_value(x, ctx.alpha);
}

FractalScalar field_op(FieldOp op, FractalScalar lhs, FractalScalar rhs,
                       double tol_base) {
  switch (op) {
    case FieldOp::add:
      return lhs + rhs;
    case FieldOp::sub:
      return lhs - rhs;
    case FieldOp::mul:
      return lhs * rhs;
    case FieldOp::div:
      if (std::fabs(rhs.base()) <= tol_base)
        throw std::domain_error("field_op: division by zero element");
      return FractalScalar::from_base(lhs.base() / rhs.base());
  }
  throw std::logic_error("field_op: bad op");
}

FractalScalar scalar_scale(double c, FractalScalar x, const AlphaContext& ctx) {
  return FractalScalar::from_value(c * x.value(ctx.alpha), ctx.alpha);
}

Order compare(FractalScalar lhs, FractalScalar rhs, double tol_base) {
  double a = lhs.base();
  double b = rhs.base();
  double band = tol_base * std::fmax(std::fabs(a), std::fabs(b));
  if (band < kCompareAbsFloor) band = kCompareAbsFloor;
  if (std::fabs(a - b) <= band) return Order::equal;
  return a < b ? Order::less : Order::greater;
}

namespace {

// Lanczos rational approximation, N=13, g=6.024680040776729583740234375,
// coefficients tuned for IEEE double.  Valid for z >= 1; the caller shifts
// smaller arguments with Gamma(t) = Gamma(t+1)/t.
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

// Denominator z(z+1)...(z+11), coefficients of z^0..z^12.
constexpr double kLanczosDen[13] = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

double lanczos_sum(double z) {
  if (z <= 1.0) {
    double num = kLanczosNum[12];
    double den = kLanczosDen[12];
    for (int i = 11; i >= 0; --i) {
      num = num * z + kLanczosNum[i];
      den = den * z + kLanczosDen[i];
    }
    return num / den;
  }
  // Evaluate in 1/z to keep intermediates small for large arguments.
  double t = 1.0 / z;
  double num = kLanczosNum[0];
  double den = kLanczosDen[0];
  for (int i = 1; i <= 12; ++i) {
    num = num * t + kLanczosNum[i];
    den = den * t + kLanczosDen[i];
  }
  return num / den;
}

}  // namespace

double gamma(double t) {
  if (!(t > 0.0)) throw std::domain_error("gamma: require t > 0");
  double shift = 1.0;
  double z = t;
  if (z < 1.0) {
    shift = 1.0 / z;
    z += 1.0;
  }
  // sqrt(2*pi) is folded into the numerator coefficients
  double zg = z + kLanczosG - 0.5;
  double result = std::pow(zg, z - 0.5) * std::exp(-zg) * lanczos_sum(z);
  return shift * result;
}

}  // namespace fsc
