#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "fsc/expr.hpp"
#include "fsc/gallery.hpp"

namespace {

const fsc::AlphaContext kHalf{0.5, 0.5, fsc::kDefaultTolBase,
                              fsc::kDefaultTolViolation};

fsc::SearchBudget quick() {
  fsc::SearchBudget b;
  b.grid_n = 24;
  b.t_grid_n = 32;
  b.random_trials = 4000;
  b.refine_steps = 12;
  b.seed = 11;
  return b;
}

bool is_member(const fsc::Verdict& v) {
  return v.status != fsc::CertStatus::violation;
}

}  // namespace

TEST_CASE("example family A: expectations follow the case conditions") {
  struct Row {
    double a, b, c;
    fsc::Expectation gk1, gk2;
  };
  // clang-format off
  const Row rows[] = {
      {0, 1,  0, fsc::Expectation::member,  fsc::Expectation::member},
      {0, 1, -1, fsc::Expectation::member,  fsc::Expectation::non_member},
      {1, 1,  0, fsc::Expectation::member,  fsc::Expectation::member},
      {1, 1, -1, fsc::Expectation::member,  fsc::Expectation::non_member},
      {0, 1,  2, fsc::Expectation::unknown, fsc::Expectation::unknown},
      {2, 0,  1, fsc::Expectation::member,  fsc::Expectation::member},
  };
  // clang-format on
  for (const auto& r : rows) {
    CAPTURE(r.a);
    CAPTURE(r.c);
    const auto ex = fsc::make_example41({r.a, r.b, r.c, 0.5}, kHalf);
    CHECK(ex.expected.gk1 == r.gk1);
    CHECK(ex.expected.gk2 == r.gk2);
  }

  // The drop-at-zero case is flagged exactly when c < a strictly.
  CHECK(fsc::make_example41({1, 1, 0, 0.5}, kHalf).expected.case_ii);
  CHECK_FALSE(fsc::make_example41({1, 1, 1, 0.5}, kHalf).expected.case_ii);
}

TEST_CASE("example family A: built functions evaluate as displayed") {
  const auto ex = fsc::make_example41({2, 3, -1, 0.5}, kHalf);
  const auto basef = fsc::base_view(ex.fn, kHalf);
  CHECK(basef(0.0) == 2.0);
  CHECK(basef(4.0) == doctest::Approx(3.0 * 2.0 - 1.0).epsilon(1e-15));

  // The s used to build the family must be the ambient class index.
  CHECK_THROWS_AS(fsc::make_example41({0, 1, 0, 0.25}, kHalf),
                  std::invalid_argument);
}

TEST_CASE("example family A: verdicts match expectations on canonical cases") {
  for (const auto& p : fsc::canonical_example41_cases(0.5)) {
    CAPTURE(p.a);
    CAPTURE(p.c);
    const auto ex = fsc::make_example41(p, kHalf);
    const auto v1 = fsc::certify(ex.fn, fsc::ClassKind::gk1,
                                 fsc::ConvexSense::convex, kHalf, quick());
    const auto v2 = fsc::certify(ex.fn, fsc::ClassKind::gk2,
                                 fsc::ConvexSense::convex, kHalf, quick());
    CHECK(is_member(v1) == (ex.expected.gk1 == fsc::Expectation::member));
    if (ex.expected.gk2 == fsc::Expectation::member) {
      CHECK(is_member(v2));
    } else {
      REQUIRE(v2.status == fsc::CertStatus::violation);
      REQUIRE(v2.witness.has_value());
      const auto basef = fsc::base_view(ex.fn, kHalf);
      const double re = fsc::replay_margin(basef, *v2.witness, 0.5, v2.sense);
      CHECK(re == doctest::Approx(v2.witness->margin).epsilon(1e-12));
    }
  }
}

TEST_CASE("example family A: a small matrix crossing is fully consistent") {
  const auto rows = fsc::run_example41_matrix({0.0, 1.0, 2.0}, {0.5}, {0.5},
                                              quick());
  REQUIRE(rows.size() == 27);
  int unknown_cells = 0;
  for (const auto& r : rows) {
    CAPTURE(r.params.a);
    CAPTURE(r.params.b);
    CAPTURE(r.params.c);
    CHECK(r.consistent);
    if (r.expected.gk1 == fsc::Expectation::unknown) ++unknown_cells;
  }
  // Exactly the c > a cells fall outside the published cases: 9 of 27.
  CHECK(unknown_cells == 9);

  const auto csv = fsc::matrix_csv(rows);
  CHECK(csv.find("a,b,c,s,alpha,") == 0);
  CHECK(csv.find("no\n") == std::string::npos);  // every row consistent
}

TEST_CASE("example family B: construction and classification") {
  CHECK_THROWS_AS(fsc::make_example42({1.0, 0.5}, kHalf),
                  std::invalid_argument);

  const auto ex = fsc::make_example42({2.0, 0.5}, kHalf);
  const auto basef = fsc::base_view(ex.fn, kHalf);
  CHECK(basef(0.5) == 0.5);  // s/(1-s) = 1 at s = 0.5
  CHECK(basef(1.0) == 1.0);
  CHECK(basef(2.0) == 4.0);  // k * u

  // First kind: clean search.  Second kind: violation at default density.
  const auto v1 = fsc::certify(ex.fn, fsc::ClassKind::gk1,
                               fsc::ConvexSense::convex, kHalf, quick(),
                               /*use_patterns=*/false);
  CHECK(v1.status == fsc::CertStatus::no_violation_found);

  fsc::SearchBudget dense;
  dense.random_trials = 20000;
  dense.refine_steps = 12;
  dense.seed = 7;
  const auto v2 = fsc::certify(ex.fn, fsc::ClassKind::gk2,
                               fsc::ConvexSense::convex, kHalf, dense,
                               /*use_patterns=*/false);
  REQUIRE(v2.status == fsc::CertStatus::violation);
  CHECK(v2.witness->margin > 1e-6);
}

TEST_CASE("example family B: the weighted-pair inequality yields a witness") {
  const auto w = fsc::find_ineq35_witness({2.0, 0.5}, kHalf);
  REQUIRE(w.has_value());
  CHECK(w->a > 1.0);
  CHECK(w->lambda1 > 0.0);
  CHECK(w->lambda1 < 1.0);
  CHECK(w->margin > 0.05);

  // Frozen by hand: at lambda1 = 0.9, a = 1.05 the slack is
  // sqrt(0.9) + 2*(0.15)/sqrt(0.1) - 2.1 = -0.202633...; the scan's best
  // margin must be at least as large.
  const double by_hand = -(std::sqrt(0.9) + 2.0 * 0.15 / std::sqrt(0.1) - 2.1);
  CHECK(w->margin >= doctest::Approx(by_hand).epsilon(1e-9));

  // The witness converts to a second-kind violation of the displayed
  // definition: weights sum to one and the margin replays through f.
  const auto def32 = w->def32();
  CHECK(def32.u == 1.0);
  CHECK(def32.v > 1.0);
  CHECK(def32.lambda1 + def32.lambda2 == doctest::Approx(1.0).epsilon(1e-15));
  const auto ex = fsc::make_example42({2.0, 0.5}, kHalf);
  const auto basef = fsc::base_view(ex.fn, kHalf);
  const double re =
      fsc::replay_margin(basef, def32, 0.5, fsc::ConvexSense::convex);
  CHECK(re > 1e-6);
  CHECK(re == doctest::Approx(def32.margin).epsilon(1e-9));

  // Larger k deepens the violation.
  const fsc::AlphaContext quarter{0.5, 0.25, fsc::kDefaultTolBase,
                                  fsc::kDefaultTolViolation};
  const auto w4 = fsc::find_ineq35_witness({4.0, 0.25}, quarter);
  REQUIRE(w4.has_value());
  CHECK(w4->margin > w->margin);
}

TEST_CASE("default corpus parses and certifies without surprises") {
  const auto corpus = fsc::default_corpus(kHalf);
  CHECK(corpus.size() >= 10);
  for (const auto& entry : corpus) {
    CAPTURE(entry.name);
    const auto v = fsc::certify(entry.fn, fsc::ClassKind::gk2,
                                fsc::ConvexSense::convex, kHalf, quick(),
                                /*use_patterns=*/false);
    // Statuses vary; what must hold corpus-wide is witness replayability.
    if (v.witness) {
      const auto basef = fsc::base_view(entry.fn, kHalf);
      const double re = fsc::replay_margin(basef, *v.witness, 0.5, v.sense);
      CHECK(re == doctest::Approx(v.witness->margin).epsilon(1e-12));
    }
  }
}
