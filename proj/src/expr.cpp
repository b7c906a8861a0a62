#include "fsc/expr.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace fsc {

// ---------------------------------------------------------------------------
// KExpr
// ---------------------------------------------------------------------------

KExprPtr KExpr::make_num(double v) {
  auto e = std::make_shared<KExpr>();
  e->kind = Kind::num;
  e->number = v;
  return e;
}

KExprPtr KExpr::make_s() {
  auto e = std::make_shared<KExpr>();
  e->kind = Kind::sym_s;
  return e;
}

KExprPtr KExpr::binary(Kind k, KExprPtr l, KExprPtr r) {
  auto e = std::make_shared<KExpr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

KExprPtr KExpr::negate(KExprPtr x) {
  auto e = std::make_shared<KExpr>();
  e->kind = Kind::neg;
  e->lhs = std::move(x);
  return e;
}

double KExpr::eval(double s) const {
  switch (kind) {
    case Kind::num:
      return number;
    case Kind::sym_s:
      return s;
    case Kind::add:
      return lhs->eval(s) + rhs->eval(s);
    case Kind::sub:
      return lhs->eval(s) - rhs->eval(s);
    case Kind::mul:
      return lhs->eval(s) * rhs->eval(s);
    case Kind::div: {
      double d = rhs->eval(s);
      if (d == 0.0) throw EvalError("coefficient expression divides by zero");
      return lhs->eval(s) / d;
    }
    case Kind::neg:
      return -lhs->eval(s);
  }
  throw EvalError("bad coefficient node");
}

// ---------------------------------------------------------------------------
// ScalarExpr
// ---------------------------------------------------------------------------

ScalarExprPtr ScalarExpr::make_num(double v) {
  auto e = std::make_shared<ScalarExpr>();
  e->kind = Kind::num;
  e->number = v;
  return e;
}

ScalarExprPtr ScalarExpr::make_u() {
  auto e = std::make_shared<ScalarExpr>();
  e->kind = Kind::var_u;
  return e;
}

ScalarExprPtr ScalarExpr::binary(Kind k, ScalarExprPtr l, ScalarExprPtr r) {
  auto e = std::make_shared<ScalarExpr>();
  e->kind = k;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

ScalarExprPtr ScalarExpr::make_pow(ScalarExprPtr base, double r) {
  auto e = std::make_shared<ScalarExpr>();
  e->kind = Kind::pow;
  e->lhs = std::move(base);
  e->number = r;
  return e;
}

ScalarExprPtr ScalarExpr::negate(ScalarExprPtr x) {
  auto e = std::make_shared<ScalarExpr>();
  e->kind = Kind::neg;
  e->lhs = std::move(x);
  return e;
}

double ScalarExpr::eval(double u) const {
  switch (kind) {
    case Kind::num:
      return number;
    case Kind::var_u:
      return u;
    case Kind::add:
      return lhs->eval(u) + rhs->eval(u);
    case Kind::sub:
      return lhs->eval(u) - rhs->eval(u);
    case Kind::mul:
      return lhs->eval(u) * rhs->eval(u);
    case Kind::div: {
      double d = rhs->eval(u);
      if (d == 0.0) throw EvalError("scalar expression divides by zero");
      return lhs->eval(u) / d;
    }
    case Kind::pow: {
      double b = lhs->eval(u);
      double r = number;
      if (b < 0.0 && r != std::floor(r))
        throw EvalError("negative base to fractional power");
      if (b == 0.0 && r < 0.0) throw EvalError("pole in scalar expression");
      return std::pow(b, r);
    }
    case Kind::neg:
      return -lhs->eval(u);
  }
  throw EvalError("bad scalar node");
}

// ---------------------------------------------------------------------------
// FnExpr
// ---------------------------------------------------------------------------

bool Guard::matches(double u) const {
  switch (op) {
    case GuardOp::eq:
      return u == c;
    case GuardOp::lt:
      return u < c;
    case GuardOp::le:
      return u <= c;
    case GuardOp::gt:
      return u > c;
    case GuardOp::ge:
      return u >= c;
    case GuardOp::always:
      return true;
  }
  return false;
}

FnPtr FnExpr::constant(ScalarMode mode, double x) {
  auto e = std::make_shared<FnExpr>();
  e->kind = Kind::fconst;
  e->cmode = mode;
  e->cvalue = x;
  return e;
}

FnPtr FnExpr::mono(KExprPtr k) {
  auto e = std::make_shared<FnExpr>();
  e->kind = Kind::mono;
  e->k = std::move(k);
  return e;
}

FnPtr FnExpr::mono(double k) { return mono(KExpr::make_num(k)); }

static FnPtr make_binary(FnExpr::Kind kind, FnPtr l, FnPtr r) {
  auto e = std::make_shared<FnExpr>();
  e->kind = kind;
  e->lhs = std::move(l);
  e->rhs = std::move(r);
  return e;
}

FnPtr FnExpr::sum(FnPtr l, FnPtr r) {
  return make_binary(Kind::sum, std::move(l), std::move(r));
}
FnPtr FnExpr::diff(FnPtr l, FnPtr r) {
  return make_binary(Kind::diff, std::move(l), std::move(r));
}
FnPtr FnExpr::product(FnPtr l, FnPtr r) {
  return make_binary(Kind::product, std::move(l), std::move(r));
}
FnPtr FnExpr::maxof(FnPtr l, FnPtr r) {
  return make_binary(Kind::maxof, std::move(l), std::move(r));
}

FnPtr FnExpr::piecewise(std::vector<Branch> branches) {
  auto e = std::make_shared<FnExpr>();
  e->kind = Kind::piecewise;
  e->branches = std::move(branches);
  return e;
}

FnPtr FnExpr::subst(FnPtr outer, ScalarExprPtr inner) {
  auto e = std::make_shared<FnExpr>();
  e->kind = Kind::subst;
  e->outer = std::move(outer);
  e->inner = std::move(inner);
  return e;
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

FractalScalar evaluate(const FnPtr& f, double u, const AlphaContext& ctx) {
  if (u < 0.0) throw EvalError("evaluate: u must be >= 0");
  switch (f->kind) {
    case FnExpr::Kind::fconst:
      return make_scalar(f->cmode, f->cvalue, ctx);
    case FnExpr::Kind::mono: {
      double k = f->k->eval(ctx.s);
      if (u == 0.0 && k < 0.0) throw EvalError("mono: pole at u = 0");
      return FractalScalar::from_base(std::pow(u, k));
    }
    case FnExpr::Kind::sum:
      return evaluate(f->lhs, u, ctx) + evaluate(f->rhs, u, ctx);
    case FnExpr::Kind::diff:
      return evaluate(f->lhs, u, ctx) - evaluate(f->rhs, u, ctx);
    case FnExpr::Kind::product:
      return evaluate(f->lhs, u, ctx) * evaluate(f->rhs, u, ctx);
    case FnExpr::Kind::maxof: {
      auto a = evaluate(f->lhs, u, ctx);
      auto b = evaluate(f->rhs, u, ctx);
      return a.base() >= b.base() ? a : b;
    }
    case FnExpr::Kind::piecewise: {
      for (const auto& br : f->branches)
        if (br.guard.matches(u)) return evaluate(br.expr, u, ctx);
      throw EvalError("piecewise: no branch matches u = " + num_str(u));
    }
    case FnExpr::Kind::subst: {
      double w = f->inner->eval(u);
      if (w < 0.0) throw EvalError("subst: inner map left R+");
      return evaluate(f->outer, w, ctx);
    }
  }
  throw EvalError("bad function node");
}

std::function<double(double)> base_view(const FnPtr& f,
                                        const AlphaContext& ctx) {
  return [f, ctx](double u) { return evaluate(f, u, ctx).base(); };
}

// ---------------------------------------------------------------------------
// combinators
// ---------------------------------------------------------------------------

FnPtr combine(CombineKind kind, FnPtr a, FnPtr b) {
  switch (kind) {
    case CombineKind::sum:
      return FnExpr::sum(std::move(a), std::move(b));
    case CombineKind::product:
      return FnExpr::product(std::move(a), std::move(b));
    case CombineKind::max:
      return FnExpr::maxof(std::move(a), std::move(b));
  }
  throw std::invalid_argument("combine: bad kind");
}

FnPtr compose(FnPtr f, ScalarExprPtr g) {
  return FnExpr::subst(std::move(f), std::move(g));
}

FnPtr thm35_pattern(FnPtr p, double s) {
  if (!(s > 0.0) || !(s < 1.0))
    throw std::invalid_argument("thm35_pattern: require 0 < s < 1");
  return FnExpr::product(FnExpr::mono(s / (1.0 - s)), std::move(p));
}

// ---------------------------------------------------------------------------
// piecewise coverage of [0, +inf)
// ---------------------------------------------------------------------------

bool piecewise_total(const std::vector<Branch>& branches) {
  if (branches.empty()) return false;
  std::vector<double> cuts{0.0};
  for (const auto& br : branches) {
    if (br.guard.op == GuardOp::always) return true;
    if (br.guard.c >= 0.0) cuts.push_back(br.guard.c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Guard sets are intervals (or points) with endpoints among the cut
  // values, so coverage of [0, inf) holds iff every cut, every midpoint of
  // consecutive cuts, and one point beyond the largest cut are covered.
  std::vector<double> probes;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    probes.push_back(cuts[i]);
    if (i + 1 < cuts.size()) probes.push_back(0.5 * (cuts[i] + cuts[i + 1]));
  }
  probes.push_back(cuts.back() + 1.0);

  for (double p : probes) {
    bool hit = false;
    for (const auto& br : branches)
      if (br.guard.matches(p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// printing
// ---------------------------------------------------------------------------

std::string num_str(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

const char* guard_op_str(GuardOp op) {
  switch (op) {
    case GuardOp::eq:
      return "==";
    case GuardOp::lt:
      return "<";
    case GuardOp::le:
      return "<=";
    case GuardOp::gt:
      return ">";
    case GuardOp::ge:
      return ">=";
    case GuardOp::always:
      return "else";
  }
  return "?";
}

std::string kprint(const KExprPtr& k, int parent_prec);

std::string kprint_binary(const KExprPtr& k, const char* op, int prec,
                          int parent_prec) {
  std::string out = kprint(k->lhs, prec) + op + kprint(k->rhs, prec + 1);
  if (prec < parent_prec) out = "(" + out + ")";
  return out;
}

// precedence: 0 add/sub, 1 mul/div, 2 atoms
std::string kprint(const KExprPtr& k, int parent_prec) {
  switch (k->kind) {
    case KExpr::Kind::num:
      return num_str(k->number);
    case KExpr::Kind::sym_s:
      return "s";
    case KExpr::Kind::add:
      return kprint_binary(k, " + ", 0, parent_prec);
    case KExpr::Kind::sub:
      return kprint_binary(k, " - ", 0, parent_prec);
    case KExpr::Kind::mul:
      return kprint_binary(k, "*", 1, parent_prec);
    case KExpr::Kind::div:
      return kprint_binary(k, "/", 1, parent_prec);
    case KExpr::Kind::neg:
      return "-" + kprint(k->lhs, 2);
  }
  return "?";
}

std::string sprint(const ScalarExprPtr& g, int parent_prec);

std::string sprint_binary(const ScalarExprPtr& g, const char* op, int prec,
                          int parent_prec) {
  std::string out = sprint(g->lhs, prec) + op + sprint(g->rhs, prec + 1);
  if (prec < parent_prec) out = "(" + out + ")";
  return out;
}

std::string sprint(const ScalarExprPtr& g, int parent_prec) {
  switch (g->kind) {
    case ScalarExpr::Kind::num:
      return num_str(g->number);
    case ScalarExpr::Kind::var_u:
      return "u";
    case ScalarExpr::Kind::add:
      return sprint_binary(g, " + ", 0, parent_prec);
    case ScalarExpr::Kind::sub:
      return sprint_binary(g, " - ", 0, parent_prec);
    case ScalarExpr::Kind::mul:
      return sprint_binary(g, "*", 1, parent_prec);
    case ScalarExpr::Kind::div:
      return sprint_binary(g, "/", 1, parent_prec);
    case ScalarExpr::Kind::pow:
      return "pow(" + sprint(g->lhs, 0) + ", " + num_str(g->number) + ")";
    case ScalarExpr::Kind::neg:
      return "-" + sprint(g->lhs, 2);
  }
  return "?";
}

std::string fprint(const FnPtr& f, int parent_prec);

// precedence: 0 sum/diff, 1 product, 2 atoms
std::string fprint_binary(const FnPtr& f, const char* op, int prec,
                          int parent_prec) {
  std::string out = fprint(f->lhs, prec) + op + fprint(f->rhs, prec + 1);
  if (prec < parent_prec) out = "(" + out + ")";
  return out;
}

std::string fprint(const FnPtr& f, int parent_prec) {
  switch (f->kind) {
    case FnExpr::Kind::fconst:
      return (f->cmode == ScalarMode::base ? "fb(" : "fv(") +
             num_str(f->cvalue) + ")";
    case FnExpr::Kind::mono:
      return "mono(" + kprint(f->k, 0) + ")";
    case FnExpr::Kind::sum:
      return fprint_binary(f, " + ", 0, parent_prec);
    case FnExpr::Kind::diff:
      return fprint_binary(f, " - ", 0, parent_prec);
    case FnExpr::Kind::product:
      return fprint_binary(f, " * ", 1, parent_prec);
    case FnExpr::Kind::maxof:
      return "max(" + fprint(f->lhs, 0) + ", " + fprint(f->rhs, 0) + ")";
    case FnExpr::Kind::piecewise: {
      std::string out = "pw(";
      bool first = true;
      for (const auto& br : f->branches) {
        if (!first) out += "; ";
        first = false;
        if (br.guard.op == GuardOp::always)
          out += "else";
        else
          out += std::string("u") + guard_op_str(br.guard.op) +
                 num_str(br.guard.c);
        out += " -> " + fprint(br.expr, 0);
      }
      return out + ")";
    }
    case FnExpr::Kind::subst:
      return "subst(" + fprint(f->outer, 0) + "; " + sprint(f->inner, 0) + ")";
  }
  return "?";
}

json kjson(const KExprPtr& k) {
  switch (k->kind) {
    case KExpr::Kind::num:
      return json{{"kind", "num"}, {"x", k->number}};
    case KExpr::Kind::sym_s:
      return json{{"kind", "s"}};
    case KExpr::Kind::add:
      return json{{"kind", "add"}, {"args", json::array({kjson(k->lhs), kjson(k->rhs)})}};
    case KExpr::Kind::sub:
      return json{{"kind", "sub"}, {"args", json::array({kjson(k->lhs), kjson(k->rhs)})}};
    case KExpr::Kind::mul:
      return json{{"kind", "mul"}, {"args", json::array({kjson(k->lhs), kjson(k->rhs)})}};
    case KExpr::Kind::div:
      return json{{"kind", "div"}, {"args", json::array({kjson(k->lhs), kjson(k->rhs)})}};
    case KExpr::Kind::neg:
      return json{{"kind", "neg"}, {"arg", kjson(k->lhs)}};
  }
  return json();
}

json sjson(const ScalarExprPtr& g) {
  switch (g->kind) {
    case ScalarExpr::Kind::num:
      return json{{"kind", "num"}, {"x", g->number}};
    case ScalarExpr::Kind::var_u:
      return json{{"kind", "u"}};
    case ScalarExpr::Kind::add:
      return json{{"kind", "add"}, {"args", json::array({sjson(g->lhs), sjson(g->rhs)})}};
    case ScalarExpr::Kind::sub:
      return json{{"kind", "sub"}, {"args", json::array({sjson(g->lhs), sjson(g->rhs)})}};
    case ScalarExpr::Kind::mul:
      return json{{"kind", "mul"}, {"args", json::array({sjson(g->lhs), sjson(g->rhs)})}};
    case ScalarExpr::Kind::div:
      return json{{"kind", "div"}, {"args", json::array({sjson(g->lhs), sjson(g->rhs)})}};
    case ScalarExpr::Kind::pow:
      return json{{"kind", "pow"}, {"base", sjson(g->lhs)}, {"r", g->number}};
    case ScalarExpr::Kind::neg:
      return json{{"kind", "neg"}, {"arg", sjson(g->lhs)}};
  }
  return json();
}

}  // namespace

std::string pretty_print(const FnPtr& f) { return fprint(f, 0); }
std::string pretty_print(const ScalarExprPtr& g) { return sprint(g, 0); }
std::string pretty_print(const KExprPtr& k) { return kprint(k, 0); }

json ast_json(const FnPtr& f) {
  switch (f->kind) {
    case FnExpr::Kind::fconst:
      return json{{"kind", "const"},
                  {"mode", f->cmode == ScalarMode::base ? "base" : "value"},
                  {"x", f->cvalue}};
    case FnExpr::Kind::mono:
      return json{{"kind", "mono"}, {"k", kjson(f->k)}};
    case FnExpr::Kind::sum:
      return json{{"kind", "sum"},
                  {"args", json::array({ast_json(f->lhs), ast_json(f->rhs)})}};
    case FnExpr::Kind::diff:
      return json{{"kind", "diff"},
                  {"args", json::array({ast_json(f->lhs), ast_json(f->rhs)})}};
    case FnExpr::Kind::product:
      return json{{"kind", "product"},
                  {"args", json::array({ast_json(f->lhs), ast_json(f->rhs)})}};
    case FnExpr::Kind::maxof:
      return json{{"kind", "max"},
                  {"args", json::array({ast_json(f->lhs), ast_json(f->rhs)})}};
    case FnExpr::Kind::piecewise: {
      json branches = json::array();
      for (const auto& br : f->branches) {
        json guard;
        if (br.guard.op == GuardOp::always)
          guard = json{{"op", "else"}};
        else
          guard = json{{"op", guard_op_str(br.guard.op)}, {"c", br.guard.c}};
        branches.push_back(json{{"guard", guard}, {"expr", ast_json(br.expr)}});
      }
      return json{{"kind", "pw"}, {"branches", branches}};
    }
    case FnExpr::Kind::subst:
      return json{{"kind", "subst"},
                  {"outer", ast_json(f->outer)},
                  {"inner", sjson(f->inner)}};
  }
  return json();
}

}  // namespace fsc
