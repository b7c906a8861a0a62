// Textual DSL and AST for functions f: R+ -> R^alpha.
//
// Grammar:
//   fexpr  := fterm (('+'|'-') fterm)*
//   fterm  := ffact ('*' ffact)*
//   ffact  := 'fb(' num ')' | 'fv(' num ')' | 'mono(' kexpr ')'
//           | 'max(' fexpr ',' fexpr ')' | 'subst(' fexpr ';' sexpr ')'
//           | 'pw(' branch (';' branch)* ')' | '(' fexpr ')'
//   branch := guard '->' fexpr
//   guard  := 'u' ('=='|'<'|'<='|'>'|'>=') num | 'else'
//   kexpr  := arithmetic over num and the symbol 's' with + - * / and parens
//   sexpr  := real expression over 'u', num, + - * /, 'pow(u,' num ')'
//
// mono(k) denotes u^(k*alpha), held as base u^k.  fb(x) is a fractal
// constant given by base, fv(x) by value.  Piecewise guards are tried in
// document order; the first match wins.

#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fsc/algebra.hpp"
#include "json.hpp"

namespace fsc {

using json = nlohmann::ordered_json;

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what), line(line), col(col) {}
  int line;
  int col;
};

// ---------------------------------------------------------------------------
// coefficient expressions: numbers and the symbol s
// ---------------------------------------------------------------------------

class KExpr;
using KExprPtr = std::shared_ptr<const KExpr>;

class KExpr {
 public:
  enum class Kind { num, sym_s, add, sub, mul, div, neg };

  Kind kind = Kind::num;
  double number = 0.0;
  KExprPtr lhs, rhs;

  static KExprPtr make_num(double v);
  static KExprPtr make_s();
  static KExprPtr binary(Kind k, KExprPtr l, KExprPtr r);
  static KExprPtr negate(KExprPtr e);

  double eval(double s) const;  // throws EvalError on division by zero
};

// ---------------------------------------------------------------------------
// real-valued scalar expressions in u (classical functions, inner maps)
// ---------------------------------------------------------------------------

class ScalarExpr;
using ScalarExprPtr = std::shared_ptr<const ScalarExpr>;

class ScalarExpr {
 public:
  enum class Kind { num, var_u, add, sub, mul, div, pow, neg };

  Kind kind = Kind::num;
  double number = 0.0;   // num payload, or the exponent r for pow
  ScalarExprPtr lhs, rhs;

  static ScalarExprPtr make_num(double v);
  static ScalarExprPtr make_u();
  static ScalarExprPtr binary(Kind k, ScalarExprPtr l, ScalarExprPtr r);
  static ScalarExprPtr make_pow(ScalarExprPtr base, double r);
  static ScalarExprPtr negate(ScalarExprPtr e);

  // throws EvalError on poles and on negative base to a fractional power
  double eval(double u) const;
};

// ---------------------------------------------------------------------------
// fractal-valued function expressions
// ---------------------------------------------------------------------------

class FnExpr;
using FnPtr = std::shared_ptr<const FnExpr>;

enum class GuardOp { eq, lt, le, gt, ge, always };

struct Guard {
  GuardOp op = GuardOp::always;
  double c = 0.0;
  bool matches(double u) const;
};

struct Branch {
  Guard guard;
  FnPtr expr;
};

class FnExpr {
 public:
  enum class Kind { fconst, mono, sum, diff, product, maxof, piecewise, subst };

  Kind kind = Kind::fconst;

  ScalarMode cmode = ScalarMode::base;  // fconst
  double cvalue = 0.0;
  KExprPtr k;                           // mono
  FnPtr lhs, rhs;                       // sum/diff/product/maxof
  std::vector<Branch> branches;         // piecewise
  FnPtr outer;                          // subst
  ScalarExprPtr inner;

  static FnPtr constant(ScalarMode mode, double x);
  static FnPtr mono(KExprPtr k);
  static FnPtr mono(double k);
  static FnPtr sum(FnPtr l, FnPtr r);
  static FnPtr diff(FnPtr l, FnPtr r);
  static FnPtr product(FnPtr l, FnPtr r);
  static FnPtr maxof(FnPtr l, FnPtr r);
  static FnPtr piecewise(std::vector<Branch> branches);
  static FnPtr subst(FnPtr outer, ScalarExprPtr inner);
};

// ---------------------------------------------------------------------------
// operations
// ---------------------------------------------------------------------------

// Parses the DSL; throws ParseError with line/column diagnostics.  Also
// rejects piecewise expressions whose guards fail to cover [0, +inf).
FnPtr parse(const std::string& text, const AlphaContext& ctx);

// Parses just a scalar expression (sexpr grammar).
ScalarExprPtr parse_scalar(const std::string& text);

FractalScalar evaluate(const FnPtr& f, double u, const AlphaContext& ctx);

// u -> base(evaluate(f, u)); exact by construction.
std::function<double(double)> base_view(const FnPtr& f, const AlphaContext& ctx);

enum class CombineKind { sum, product, max };

FnPtr combine(CombineKind kind, FnPtr a, FnPtr b);
// f after the real inner map g (g must have range in R+; checked at
// evaluation time).
FnPtr compose(FnPtr f, ScalarExprPtr g);
// u^((s/(1-s)) * alpha) * p(u); requires 0 < s < 1.
FnPtr thm35_pattern(FnPtr p, double s);

// True when the guards cover every u >= 0 (first-match semantics).
bool piecewise_total(const std::vector<Branch>& branches);

std::string pretty_print(const FnPtr& f);
std::string pretty_print(const ScalarExprPtr& g);
std::string pretty_print(const KExprPtr& k);

json ast_json(const FnPtr& f);

// Shortest round-trip decimal form of a double.
std::string num_str(double v);

}  // namespace fsc
