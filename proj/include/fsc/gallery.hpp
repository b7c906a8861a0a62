#pragma once

// Parameterized example families with their expected classifications,
// used as end-to-end regression fixtures for the certifier.

#include <optional>
#include <string>
#include <vector>

#include "fsc/algebra.hpp"
#include "fsc/certifier.hpp"
#include "fsc/expr.hpp"

namespace fsc {

enum class Expectation { member, non_member, unknown };
const char* to_string(Expectation e);

// ---------------------------------------------------------------------------
// family A: f(0) = a, f(u) = b*u^s + c for u > 0   (all in base space)
// ---------------------------------------------------------------------------

struct Example41Params {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  double s = 0.5;
};

// Which of the four published cases the parameters satisfy, and what that
// implies.  Parameters outside every case get `unknown`: the certifier is
// still run on them, but only internal consistency is asserted.
struct Example41Expected {
  bool case_i = false;    // b >= 0, c <= a        -> first kind member
  bool case_ii = false;   // b >= 0, c <  a (strict) -> non-decreasing on
                          //   (0,inf) but not on [0,inf)
  bool case_iii = false;  // b >= 0, 0 <= c <= a   -> second kind member
  bool case_iv = false;   // b >  0, c <  0        -> second kind non-member
  Expectation gk1 = Expectation::unknown;
  Expectation gk2 = Expectation::unknown;
  json to_json() const;
};

struct Example41 {
  Example41Params params;
  FnPtr fn;
  Example41Expected expected;
};

// Builds the function and derives the expected classification from the
// parameters.  ctx.s must match params.s (the class index and the exponent
// are the same s throughout the family).
Example41 make_example41(const Example41Params& p, const AlphaContext& ctx);

// ---------------------------------------------------------------------------
// family B: f(u) = u^{s/(1-s)} on [0,1], k*u^{s/(1-s)} for u > 1, with k > 1
// ---------------------------------------------------------------------------

struct Example42Params {
  double k = 2.0;
  double s = 0.5;
};

struct Example42Expected {
  Expectation gk1 = Expectation::member;
  Expectation gk2 = Expectation::non_member;
  bool continuous_at_1 = false;
  json to_json() const;
};

struct Example42 {
  Example42Params params;
  FnPtr fn;
  Example42Expected expected;
};

// Requires k > 1 and 0 < s < 1 (and ctx.s == params.s), else throws
// std::invalid_argument.
Example42 make_example42(const Example42Params& p, const AlphaContext& ctx);

// ---------------------------------------------------------------------------
// the weighted-pair inequality behind family B's second-kind failure
// ---------------------------------------------------------------------------

// A point (a, lambda1) at which
//   k*a^{s/(1-s)} <= lambda1^s + k*(1-lambda1)^s*((a-lambda1)/(1-lambda1))^{s/(1-s)}
// fails, with the (base-space) failure size.  It converts to a standard
// second-kind witness with u = 1, v = (a-lambda1)/(1-lambda1).
struct Ineq35Witness {
  double a = 0.0;
  double lambda1 = 0.0;
  double margin = 0.0;
  Witness def32() const;
  json to_json() const;
};

// Deterministic grid-plus-refine scan of (a, lambda1) in (1, a_max] x [0, 1).
// Returns the best violation found, or nullopt if the scan budget finds none.
std::optional<Ineq35Witness> find_ineq35_witness(const Example42Params& p,
                                                 const AlphaContext& ctx,
                                                 int a_grid = 192,
                                                 int lambda_grid = 192,
                                                 double a_max = 3.0);

// ---------------------------------------------------------------------------
// regression matrix
// ---------------------------------------------------------------------------

struct MatrixRow {
  Example41Params params;
  double alpha = 0.5;
  Example41Expected expected;
  Verdict gk1;
  Verdict gk2;
  bool consistent = false;  // expected-vs-observed (or replay-only if unknown)
  json to_json() const;
};

// Certifies one parameter set in both kinds and scores it against the
// expected classification.  `consistent` demands verdict==expectation on
// classified cells and witness replay within replay_tol on every violation.
MatrixRow run_example41_row(const Example41Params& p, double alpha,
                            const SearchBudget& budget = {},
                            double replay_tol = 1e-10);

// Crosses abc^3 x ss x alphas through run_example41_row.
std::vector<MatrixRow> run_example41_matrix(const std::vector<double>& abc,
                                            const std::vector<double>& ss,
                                            const std::vector<double>& alphas,
                                            const SearchBudget& budget = {},
                                            double replay_tol = 1e-10);

// The four signed parameter sets exercising cases (i)-(iv) directly.
std::vector<Example41Params> canonical_example41_cases(double s = 0.5);

std::string matrix_csv(const std::vector<MatrixRow>& rows);

// A small named corpus of base-space functions covering both families and
// the searchable shapes; used for cross-checks between the generalized and
// classical certifiers.
struct CorpusEntry {
  std::string name;
  FnPtr fn;
};
std::vector<CorpusEntry> default_corpus(const AlphaContext& ctx);

}  // namespace fsc
