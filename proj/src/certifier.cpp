#include "fsc/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iterator>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fsc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kRandomBlocks = 64;

// One point of the search space.  Weights are re-derived from (t, r) via
// constraint_pair, so a candidate can be perturbed without leaving the
// constraint surface.
struct Candidate {
  double u = 0.0;
  double v = 0.0;
  double t = 0.0;
  double r = 1.0;
  double margin = -kInf;
  bool valid = false;
};

// Margin ordering with a lexicographic tie-break, so merges are independent
// of evaluation partitioning.
bool better(const Candidate& a, const Candidate& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  if (a.margin != b.margin) return a.margin > b.margin;
  if (a.u != b.u) return a.u < b.u;
  if (a.v != b.v) return a.v < b.v;
  if (a.t != b.t) return a.t < b.t;
  return a.r < b.r;
}

// The single arithmetic sequence every margin in this module goes through.
// l1s/l2s must be pow(l1, s) / pow(l2, s); passing them precomputed lets the
// grid hoist the powers without changing the floating-point result.
inline double margin_core(double lhs_base, double bu, double bv, double l1s,
                          double l2s, bool flip) {
  const double rhs = l1s * bu + l2s * bv;
  const double raw = lhs_base - rhs;
  return flip ? -raw : raw;
}

struct WeightEntry {
  double t = 0.0;
  double r = 1.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double l1s = 0.0;
  double l2s = 0.0;
};

std::vector<WeightEntry> weight_table(ClassKind kind, double s, int t_grid_n,
                                      bool relaxed) {
  static const double kBudgets[] = {0.0, 0.1, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> budgets;
  if (relaxed) {
    budgets.assign(std::begin(kBudgets), std::end(kBudgets));
  } else {
    budgets.assign({1.0});
  }
  std::vector<WeightEntry> table;
  table.reserve(budgets.size() * static_cast<std::size_t>(t_grid_n));
  for (double r : budgets) {
    for (int j = 0; j < t_grid_n; ++j) {
      WeightEntry e;
      e.t = (t_grid_n == 1) ? 0.5
                            : static_cast<double>(j) / (t_grid_n - 1);
      e.r = r;
      const LambdaPair lp = constraint_pair(kind, e.t, s, r);
      e.lambda1 = lp.lambda1;
      e.lambda2 = lp.lambda2;
      e.l1s = std::pow(lp.lambda1, s);
      e.l2s = std::pow(lp.lambda2, s);
      table.push_back(e);
    }
  }
  return table;
}

std::vector<double> point_grid(int grid_n, double u_max,
                               const std::vector<double>& focus) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(grid_n) + focus.size());
  g.push_back(0.0);
  const double lo = std::log(1e-6);
  const double hi = std::log(u_max);
  for (int i = 1; i < grid_n; ++i) {
    const double frac =
        (grid_n == 2) ? 1.0 : static_cast<double>(i - 1) / (grid_n - 2);
    g.push_back(std::exp(lo + frac * (hi - lo)));
  }
  // Focus points go after the log grid so their presence never renumbers
  // the generic rows.
  for (double p : focus) g.push_back(p);
  return g;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 step: decorrelates per-block streams from a single seed.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Runs work(block) for block = 0..n_blocks-1, statically striped across the
// requested threads.  Each block writes only its own slot, so the merged
// outcome cannot depend on the thread count.
template <typename Work>
void run_blocks(int n_blocks, int threads, Work&& work) {
  threads = std::clamp(threads, 1, 256);
  if (threads == 1 || n_blocks <= 1) {
    for (int b = 0; b < n_blocks; ++b) work(b);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int b = w; b < n_blocks; b += threads) work(b);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct BlockResult {
  Candidate best;
  long long evaluations = 0;
};

double sample_point(std::mt19937_64& rng, double u_max) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double pick = uni(rng);
  if (pick < 0.0625) return 0.0;
  const double lo = std::log(1e-6);
  const double hi = std::log(u_max);
  return std::exp(lo + (hi - lo) * uni(rng));
}

// Evaluates one margin probe; invalid candidates (evaluation errors, NaN)
// never displace a valid best.
inline void consider(const BaseFn& basef, double u, double v, double bu,
                     double bv, const WeightEntry& e, bool flip,
                     Candidate& best, long long& evals) {
  ++evals;
  const double w = e.lambda1 * u + e.lambda2 * v;
  double lhs;
  try {
    lhs = basef(w);
  } catch (const EvalError&) {
    return;
  }
  Candidate c;
  c.u = u;
  c.v = v;
  c.t = e.t;
  c.r = e.r;
  c.margin = margin_core(lhs, bu, bv, e.l1s, e.l2s, flip);
  c.valid = std::isfinite(c.margin);
  if (better(c, best)) best = c;
}

Verdict search(const BaseFn& basef, ClassKind kind, ConvexSense sense,
               const AlphaContext& ctx, const SearchBudget& budget,
               bool relaxed) {
  ctx.validate();
  if (budget.grid_n < 3) throw std::invalid_argument("grid_n must be >= 3");
  if (budget.t_grid_n < 2)
    throw std::invalid_argument("t_grid_n must be >= 2");
  if (budget.random_trials < 0)
    throw std::invalid_argument("random_trials must be >= 0");
  if (budget.refine_steps < 0)
    throw std::invalid_argument("refine_steps must be >= 0");
  if (!(budget.u_max > 1e-6))
    throw std::invalid_argument("u_max must exceed 1e-6");
  for (double p : budget.focus_points) {
    if (!std::isfinite(p) || p < 0.0)
      throw std::invalid_argument("focus points must be finite and >= 0");
  }

  const bool flip = sense == ConvexSense::concave;
  const double s = ctx.s;
  const auto table = weight_table(kind, s, budget.t_grid_n, relaxed);
  const auto grid = point_grid(budget.grid_n, budget.u_max,
                               budget.focus_points);

  Verdict out;
  out.kind = kind;
  out.sense = sense;
  out.relaxed = relaxed;
  out.s = s;
  out.alpha = ctx.alpha;
  out.budget = budget;

  // Base values at grid points, shared by every pair.
  std::vector<double> gb(grid.size());
  std::vector<char> gok(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      gb[i] = basef(grid[i]);
      gok[i] = std::isfinite(gb[i]) ? 1 : 0;
    } catch (const EvalError&) {
      gok[i] = 0;
    }
  }

  // Phase 1: full grid scan, one block per u row.
  const int n_rows = static_cast<int>(grid.size());
  std::vector<BlockResult> rows(static_cast<std::size_t>(n_rows));
  run_blocks(n_rows, budget.threads, [&](int row) {
    BlockResult& res = rows[static_cast<std::size_t>(row)];
    const auto iu = static_cast<std::size_t>(row);
    if (!gok[iu]) return;
    for (std::size_t iv = 0; iv < grid.size(); ++iv) {
      if (!gok[iv]) continue;
      for (const auto& e : table) {
        consider(basef, grid[iu], grid[iv], gb[iu], gb[iv], e, flip, res.best,
                 res.evaluations);
      }
    }
  });

  Candidate best;
  for (const auto& r : rows) {
    out.evaluations += r.evaluations;
    if (better(r.best, best)) best = r.best;
  }

  // Phase 2: seeded random trials in fixed blocks.
  if (budget.random_trials > 0) {
    const long long per = budget.random_trials / kRandomBlocks;
    const long long rem = budget.random_trials % kRandomBlocks;
    std::vector<BlockResult> blocks(kRandomBlocks);
    run_blocks(kRandomBlocks, budget.threads, [&](int b) {
      BlockResult& res = blocks[static_cast<std::size_t>(b)];
      std::mt19937_64 rng(mix_seed(budget.seed, static_cast<std::uint64_t>(b)));
      std::uniform_real_distribution<double> uni(0.0, 1.0);
      const long long n = per + (b < rem ? 1 : 0);
      for (long long i = 0; i < n; ++i) {
        const double u = sample_point(rng, budget.u_max);
        const double v = sample_point(rng, budget.u_max);
        const double t = uni(rng);
        const double r = relaxed ? uni(rng) : 1.0;
        double bu, bv;
        try {
          bu = basef(u);
          bv = basef(v);
        } catch (const EvalError&) {
          ++res.evaluations;
          continue;
        }
        WeightEntry e;
        e.t = t;
        e.r = r;
        const LambdaPair lp = constraint_pair(kind, t, s, r);
        e.lambda1 = lp.lambda1;
        e.lambda2 = lp.lambda2;
        e.l1s = std::pow(lp.lambda1, s);
        e.l2s = std::pow(lp.lambda2, s);
        consider(basef, u, v, bu, bv, e, flip, res.best, res.evaluations);
      }
    });
    for (const auto& blk : blocks) {
      out.evaluations += blk.evaluations;
      if (better(blk.best, best)) best = blk.best;
    }
  }

  // Phase 3: local refinement of the best candidate (its own seed stream,
  // sequential, so the result stays thread-count independent).
  if (best.valid && budget.refine_steps > 0) {
    std::mt19937_64 rng(mix_seed(budget.seed, 0x7e6f1e57ULL));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Candidate cur = best;
    for (int step = 0; step < budget.refine_steps; ++step) {
      const double scale = 0.25 * std::pow(0.5, step / 5.0);
      const double su = std::max(cur.u, 1e-3);
      const double sv = std::max(cur.v, 1e-3);
      const double u =
          std::clamp(cur.u + scale * su * gauss(rng), 0.0, budget.u_max);
      const double v =
          std::clamp(cur.v + scale * sv * gauss(rng), 0.0, budget.u_max);
      const double t = std::clamp(cur.t + scale * gauss(rng), 0.0, 1.0);
      const double r =
          relaxed ? std::clamp(cur.r + scale * gauss(rng), 0.0, 1.0) : 1.0;
      double bu, bv;
      try {
        bu = basef(u);
        bv = basef(v);
      } catch (const EvalError&) {
        ++out.evaluations;
        continue;
      }
      WeightEntry e;
      e.t = t;
      e.r = r;
      const LambdaPair lp = constraint_pair(kind, t, s, r);
      e.lambda1 = lp.lambda1;
      e.lambda2 = lp.lambda2;
      e.l1s = std::pow(lp.lambda1, s);
      e.l2s = std::pow(lp.lambda2, s);
      consider(basef, u, v, bu, bv, e, flip, cur, out.evaluations);
    }
    if (better(cur, best)) best = cur;
  }

  if (best.valid) {
    out.max_margin = best.margin;
    if (best.margin > ctx.tol_violation) {
      const LambdaPair lp = constraint_pair(kind, best.t, s, best.r);
      Witness w;
      w.u = best.u;
      w.v = best.v;
      w.lambda1 = lp.lambda1;
      w.lambda2 = lp.lambda2;
      w.margin = best.margin;
      out.witness = w;
      out.status = CertStatus::violation;
      return out;
    }
  } else {
    out.max_margin = -kInf;
  }
  out.status = CertStatus::no_violation_found;
  return out;
}

// ---------------------------------------------------------------------------
// Structural membership rules.  Each rule is sound for the convex sense and
// mirrors a membership proof that holds for every parameter in its guard;
// anything that fails the guards falls through to the numeric search.

double const_base(const FnExpr& e, const AlphaContext& ctx) {
  return make_scalar(e.cmode, e.cvalue, ctx).base();
}

bool is_mono_with_exponent(const FnPtr& f, double target, double s,
                           double tol) {
  if (!f || f->kind != FnExpr::Kind::mono) return false;
  try {
    return std::abs(f->k->eval(s) - target) <= tol;
  } catch (const EvalError&) {
    return false;
  }
}

// Sound structural test for "non-negative and non-decreasing on [0, inf)":
// non-negative constants, monomials with non-negative exponent, sums,
// products and pointwise maxima of such, and ascending step functions
// (guards u<c / u<=c with increasing thresholds, constant branches with
// non-decreasing non-negative bases).
bool monotone_nonneg(const FnPtr& f, const AlphaContext& ctx) {
  if (!f) return false;
  switch (f->kind) {
    case FnExpr::Kind::fconst:
      return const_base(*f, ctx) >= 0.0;
    case FnExpr::Kind::mono:
      try {
        return f->k->eval(ctx.s) >= 0.0;
      } catch (const EvalError&) {
        return false;
      }
    case FnExpr::Kind::sum:
    case FnExpr::Kind::product:
    case FnExpr::Kind::maxof:
      return monotone_nonneg(f->lhs, ctx) && monotone_nonneg(f->rhs, ctx);
    case FnExpr::Kind::piecewise: {
      double prev_base = 0.0;
      double prev_threshold = -kInf;
      for (std::size_t i = 0; i < f->branches.size(); ++i) {
        const auto& br = f->branches[i];
        if (!br.expr || br.expr->kind != FnExpr::Kind::fconst) return false;
        const double b = const_base(*br.expr, ctx);
        if (b < 0.0) return false;
        if (i > 0 && b < prev_base) return false;
        prev_base = b;
        const bool last = i + 1 == f->branches.size();
        if (last) {
          if (br.guard.op != GuardOp::always) return false;
        } else {
          if (br.guard.op != GuardOp::lt && br.guard.op != GuardOp::le)
            return false;
          if (br.guard.c <= prev_threshold) return false;
          prev_threshold = br.guard.c;
        }
      }
      return !f->branches.empty();
    }
    default:
      return false;
  }
}

struct Example41Shape {
  double a = 0.0;  // base at the origin
  double b = 0.0;  // monomial coefficient base
  double c = 0.0;  // shift base
};

// Matches pw(u == 0 -> const; else -> const * mono(k) + const) with k(s) = s.
std::optional<Example41Shape> match_shifted_monomial(const FnPtr& f,
                                                     const AlphaContext& ctx) {
  if (!f || f->kind != FnExpr::Kind::piecewise || f->branches.size() != 2)
    return std::nullopt;
  const auto& origin = f->branches[0];
  const auto& rest = f->branches[1];
  if (origin.guard.op != GuardOp::eq || origin.guard.c != 0.0)
    return std::nullopt;
  if (rest.guard.op != GuardOp::always) return std::nullopt;
  if (!origin.expr || origin.expr->kind != FnExpr::Kind::fconst)
    return std::nullopt;
  const FnPtr& body = rest.expr;
  if (!body || body->kind != FnExpr::Kind::sum) return std::nullopt;
  const FnPtr& prod = body->lhs;
  const FnPtr& shift = body->rhs;
  if (!shift || shift->kind != FnExpr::Kind::fconst) return std::nullopt;
  if (!prod || prod->kind != FnExpr::Kind::product) return std::nullopt;
  FnPtr coeff, power;
  if (prod->lhs && prod->lhs->kind == FnExpr::Kind::fconst) {
    coeff = prod->lhs;
    power = prod->rhs;
  } else if (prod->rhs && prod->rhs->kind == FnExpr::Kind::fconst) {
    coeff = prod->rhs;
    power = prod->lhs;
  } else {
    return std::nullopt;
  }
  if (!is_mono_with_exponent(power, ctx.s, ctx.s, 1e-12)) return std::nullopt;
  Example41Shape shape;
  shape.a = const_base(*origin.expr, ctx);
  shape.b = const_base(*coeff, ctx);
  shape.c = const_base(*shift, ctx);
  return shape;
}

struct PatternHit {
  CertStatus status = CertStatus::proven_member;
  std::string rule_id;
  std::optional<Witness> witness;
};

std::optional<PatternHit> try_patterns(const FnPtr& f, ClassKind kind,
                                       ConvexSense sense,
                                       const AlphaContext& ctx, bool relaxed) {
  if (sense != ConvexSense::convex || !f) return std::nullopt;
  const double s = ctx.s;

  // u^{s alpha}: subadditivity of t -> t^s proves both classes, with or
  // without the full weight budget.
  if (is_mono_with_exponent(f, s, s, 1e-12)) {
    return PatternHit{CertStatus::proven_member, "monomial-subadditivity", {}};
  }

  // u^{(s/(1-s)) alpha} * p(u) with p non-negative and non-decreasing is a
  // member of the first class; its value at 0 is 0^alpha, which also covers
  // the relaxed constraint.
  if (kind == ClassKind::gk1 && s < 1.0) {
    const double kexp = s / (1.0 - s);
    if (is_mono_with_exponent(f, kexp, s, 1e-9)) {
      return PatternHit{
          CertStatus::proven_member, "monotone-weighted-monomial", {}};
    }
    if (f->kind == FnExpr::Kind::product) {
      const bool lhs_mono = is_mono_with_exponent(f->lhs, kexp, s, 1e-9);
      const bool rhs_mono = is_mono_with_exponent(f->rhs, kexp, s, 1e-9);
      const FnPtr& other = lhs_mono ? f->rhs : f->lhs;
      if ((lhs_mono || rhs_mono) && monotone_nonneg(other, ctx)) {
        return PatternHit{
            CertStatus::proven_member, "monotone-weighted-monomial", {}};
      }
    }
  }

  // Shifted monomial with a separate origin value.
  if (s < 1.0) {
    if (auto shape = match_shifted_monomial(f, ctx)) {
      // Negative shift sinks the curve below 0^alpha, which the second
      // class cannot tolerate: the midpoint combination at the minimum of
      // the base curve is a ready-made violation (its weights sum to 1, so
      // it also violates the relaxed constraint).
      if (kind == ClassKind::gk2 && shape->b > 0.0 && shape->c < 0.0) {
        const double u1 = std::pow(-shape->c / (2.0 * shape->b), 1.0 / s);
        const BaseFn basef = base_view(f, ctx);
        Witness w;
        w.u = u1;
        w.v = u1;
        w.lambda1 = 0.5;
        w.lambda2 = 0.5;
        w.margin = inequality_margin(basef, u1, u1, 0.5, 0.5, s, sense);
        if (std::isfinite(w.margin) && w.margin > ctx.tol_violation) {
          return PatternHit{CertStatus::violation, "negative-value-dip", w};
        }
      }
      if (!relaxed && shape->b >= 0.0) {
        const bool member = kind == ClassKind::gk1
                                ? shape->c <= shape->a
                                : (shape->c >= 0.0 && shape->c <= shape->a);
        if (member) {
          return PatternHit{
              CertStatus::proven_member, "shifted-monomial", {}};
        }
      }
    }
  }
  return std::nullopt;
}

Verdict certify_impl(const FnPtr& f, ClassKind kind, ConvexSense sense,
                     const AlphaContext& ctx, const SearchBudget& budget,
                     bool use_patterns, bool relaxed) {
  ctx.validate();
  if (!f) throw std::invalid_argument("certify: null expression");
  if (use_patterns) {
    if (auto hit = try_patterns(f, kind, sense, ctx, relaxed)) {
      Verdict out;
      out.status = hit->status;
      out.kind = kind;
      out.sense = sense;
      out.relaxed = relaxed;
      out.s = ctx.s;
      out.alpha = ctx.alpha;
      out.rule_id = hit->rule_id;
      out.witness = hit->witness;
      out.budget = budget;
      out.max_margin = hit->witness ? hit->witness->margin : 0.0;
      return out;
    }
  }
  return search(base_view(f, ctx), kind, sense, ctx, budget, relaxed);
}

}  // namespace

LambdaPair constraint_pair(ClassKind kind, double t, double s, double r) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::invalid_argument("constraint_pair: t must lie in [0, 1]");
  if (!(r >= 0.0 && r <= 1.0))
    throw std::invalid_argument("constraint_pair: r must lie in [0, 1]");
  if (!(s > 0.0 && s <= 1.0))
    throw std::invalid_argument("constraint_pair: s must lie in (0, 1]");
  LambdaPair lp;
  if (kind == ClassKind::gk1) {
    lp.lambda1 = std::pow(r * t, 1.0 / s);
    lp.lambda2 = std::pow(r * (1.0 - t), 1.0 / s);
  } else {
    lp.lambda1 = r * t;
    lp.lambda2 = r * (1.0 - t);
  }
  return lp;
}

double inequality_margin(const BaseFn& basef, double u, double v,
                         double lambda1, double lambda2, double s,
                         ConvexSense sense) {
  const double w = lambda1 * u + lambda2 * v;
  const double lhs = basef(w);
  return margin_core(lhs, basef(u), basef(v), std::pow(lambda1, s),
                     std::pow(lambda2, s), sense == ConvexSense::concave);
}

double replay_margin(const BaseFn& basef, const Witness& w, double s,
                     ConvexSense sense) {
  return inequality_margin(basef, w.u, w.v, w.lambda1, w.lambda2, s, sense);
}

json Witness::to_json() const {
  json j;
  j["u"] = u;
  j["v"] = v;
  j["lambda1"] = lambda1;
  j["lambda2"] = lambda2;
  j["margin"] = margin;
  return j;
}

json Verdict::to_json() const {
  json j;
  j["status"] = to_string(status);
  j["kind"] = to_string(kind);
  j["sense"] = to_string(sense);
  j["relaxed"] = relaxed;
  j["s"] = s;
  j["alpha"] = alpha;
  if (!rule_id.empty()) j["rule_id"] = rule_id;
  if (witness) j["witness"] = witness->to_json();
  json stats;
  stats["evaluations"] = evaluations;
  stats["max_margin"] = max_margin;
  stats["grid_n"] = budget.grid_n;
  stats["t_grid_n"] = budget.t_grid_n;
  stats["random_trials"] = budget.random_trials;
  stats["refine_steps"] = budget.refine_steps;
  stats["seed"] = budget.seed;
  stats["u_max"] = budget.u_max;
  stats["focus_points"] = json(budget.focus_points);
  j["budget_stats"] = stats;
  return j;
}

namespace {

void collect_guard_thresholds(const FnPtr& f, std::vector<double>& out) {
  if (!f) return;
  if (f->kind == FnExpr::Kind::piecewise) {
    for (const auto& br : f->branches) {
      if (br.guard.op != GuardOp::always) {
        const double c = br.guard.c;
        out.push_back(std::max(0.0, c - 1e-9));
        out.push_back(c);
        out.push_back(c + 1e-9);
      }
      collect_guard_thresholds(br.expr, out);
    }
    return;
  }
  collect_guard_thresholds(f->lhs, out);
  collect_guard_thresholds(f->rhs, out);
  collect_guard_thresholds(f->outer, out);
}

}  // namespace

std::vector<double> breakpoints(const FnPtr& f) {
  std::vector<double> pts;
  collect_guard_thresholds(f, pts);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Verdict certify(const FnPtr& f, ClassKind kind, ConvexSense sense,
                const AlphaContext& ctx, const SearchBudget& budget,
                bool use_patterns) {
  return certify_impl(f, kind, sense, ctx, budget, use_patterns, false);
}

Verdict certify_relaxed(const FnPtr& f, ClassKind kind, ConvexSense sense,
                        const AlphaContext& ctx, const SearchBudget& budget,
                        bool use_patterns) {
  return certify_impl(f, kind, sense, ctx, budget, use_patterns, true);
}

Verdict certify_classical(const BaseFn& basef, ClassKind kind,
                          ConvexSense sense, const AlphaContext& ctx,
                          const SearchBudget& budget, bool relaxed) {
  if (!basef) throw std::invalid_argument("certify_classical: null curve");
  return search(basef, kind, sense, ctx, budget, relaxed);
}

const char* to_string(CertStatus status) {
  switch (status) {
    case CertStatus::proven_member:
      return "proven_member";
    case CertStatus::no_violation_found:
      return "no_violation_found";
    case CertStatus::violation:
      return "violation";
  }
  return "unknown";
}

const char* to_string(ClassKind kind) {
  return kind == ClassKind::gk1 ? "gk1" : "gk2";
}

const char* to_string(ConvexSense sense) {
  return sense == ConvexSense::convex ? "convex" : "concave";
}

}  // namespace fsc
