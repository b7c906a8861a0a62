#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fsc/expr.hpp"  // for the json alias

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = fsc::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::vector<std::string> kQuickBudget = {
    "--grid-n", "24", "--t-grid-n", "32", "--trials", "2000",
    "--refine", "8",  "--seed",     "11",
};

std::vector<std::string> with_budget(std::vector<std::string> args) {
  args.insert(args.end(), kQuickBudget.begin(), kQuickBudget.end());
  return args;
}

}  // namespace

TEST_CASE("classify: violation reports JSON and exits 1") {
  const auto r = run(with_budget(
      {"classify", "--alpha", "0.5", "--s", "0.5", "--sense", "2", "--fn",
       "pw(u == 0 -> fb(0); else -> fb(1)*mono(s) + fb(-1))"}));
  CHECK(r.code == 1);
  const auto j = fsc::json::parse(r.out);
  CHECK(j["schema"] == "1");
  CHECK(j["command"] == "classify");
  CHECK(j["verdict"]["status"] == "violation");
  CHECK(j["verdict"]["witness"]["margin"].get<double>() > 1e-6);
}

TEST_CASE("classify: member exits 0, text mode is human-readable") {
  const auto r = run(with_budget({"classify", "--sense", "1", "--fn",
                                  "mono(s)", "--output", "text"}));
  CHECK(r.code == 0);
  CHECK(r.out.find("status: proven_member") != std::string::npos);
  CHECK(r.out.find("rule: ") != std::string::npos);

  const auto searched = run(with_budget({"classify", "--sense", "1", "--fn",
                                         "mono(s)", "--no-patterns"}));
  CHECK(searched.code == 0);
  const auto j = fsc::json::parse(searched.out);
  CHECK(j["verdict"]["status"] == "no_violation_found");
}

TEST_CASE("classify: identical argv gives byte-identical output") {
  auto argv = with_budget({"classify", "--sense", "2", "--fn",
                           "pw(u <= 1 -> mono(1); else -> fb(2)*mono(1))"});
  auto threads4 = argv;
  argv.insert(argv.end(), {"--threads", "1"});
  threads4.insert(threads4.end(), {"--threads", "4"});
  const auto a = run(argv);
  const auto b = run(argv);
  const auto c = run(threads4);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);  // thread count must not change the verdict bytes
}

TEST_CASE("calc: integrate and derive hit the spot values") {
  const auto ri = run({"calc", "integrate", "--alpha", "0.5", "--fn",
                       "mono(1)", "--from", "0", "--to", "1"});
  REQUIRE(ri.code == 0);
  const auto ji = fsc::json::parse(ri.out);
  CHECK(ji["result"]["value"].get<double>() ==
        doctest::Approx(0.7978845608).epsilon(1e-6));
  CHECK(ji["result"].contains("convergence_estimate"));

  const auto rd = run({"calc", "derive", "--alpha", "0.5", "--fn", "mono(1)",
                       "--at", "0"});
  REQUIRE(rd.code == 0);
  const auto jd = fsc::json::parse(rd.out);
  CHECK(jd["result"]["value"].get<double>() ==
        doctest::Approx(0.8862269255).epsilon(1e-8));
}

TEST_CASE("calc: continuity flags the step function's jump") {
  const auto r = run({"calc", "continuity", "--alpha", "0.5", "--s", "0.5",
                      "--fn", "pw(u <= 1 -> mono(1); else -> fb(2)*mono(1))",
                      "--at", "1", "--output", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("continuous at 1: no") != std::string::npos);
}

TEST_CASE("calc: ratio-limit and ftc run clean") {
  const auto rr = run({"calc", "ratio-limit", "--alpha", "0.5", "--fn",
                       "mono(1)", "--gn", "mono(1)", "--at", "0"});
  REQUIRE(rr.code == 0);
  const auto jr = fsc::json::parse(rr.out);
  CHECK(jr["result"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));

  const auto rf = run({"calc", "ftc", "--alpha", "0.5", "--fn",
                       "mono(1) + fb(1)", "--at", "0.7"});
  REQUIRE(rf.code == 0);
  const auto jf = fsc::json::parse(rf.out);
  CHECK(jf["result"]["residual"].get<double>() < 1e-5);
}

TEST_CASE("sandwich: CSV grid with the frozen chain row") {
  const auto r = run({"sandwich", "--alpha", "0.5", "--s", "0.5", "--fn",
                      "mono(1)", "--n", "8", "--u-max", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("u,lower_value,phi_value,upper_value\n", 0) == 0);
  // Row at u = 1 carries the closed-form chain 0.5, sqrt(1/2), 1.
  CHECK(r.out.find("1,0.5,0.7071067811865476,1\n") != std::string::npos);
  // 8 data rows plus header.
  int lines = 0;
  for (char ch : r.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 9);
}

TEST_CASE("theorems: quick-budget suite holds and emits JSON on request") {
  const auto r = run(with_budget({"theorems", "--suite", "all", "--corpus",
                                  "default", "--json"}));
  CHECK(r.code == 0);
  const auto j = fsc::json::parse(r.out);
  CHECK(j["schema"] == "1");
  REQUIRE(j["reports"].is_array());
  CHECK(j["reports"].size() >= 20);
  for (const auto& rep : j["reports"]) CHECK(rep["conclusion"] == "holds");

  const auto table = run(with_budget({"theorems"}));
  CHECK(table.code == 0);
  CHECK(table.out.find("thm37") != std::string::npos);
}

TEST_CASE("examples: matrix is consistent; JSON carries both families") {
  // Family B's second-kind violation basin is narrow; it needs the default
  // grid density, so only the random/refine budget is trimmed here.
  const auto r = run({"examples", "--output", "json", "--trials", "20000",
                      "--refine", "12", "--seed", "7"});
  CHECK(r.code == 0);
  const auto j = fsc::json::parse(r.out);
  CHECK(j["all_consistent"] == true);
  CHECK(j["family_a"].size() == 31);  // 27 cube cells + 4 canonical cases
  CHECK(j["family_b"]["gk2"]["status"] == "violation");
  CHECK(j["family_b"].contains("weighted_pair_witness"));

  // At s = 1/4 the family-B basin is a sliver around the jump; the command
  // seeds the jump landmarks itself, so the classification still lands.
  const auto r25 = run({"examples", "--s", "0.25", "--output", "json",
                        "--trials", "20000", "--refine", "12", "--seed", "7"});
  CHECK(r25.code == 0);
  const auto j25 = fsc::json::parse(r25.out);
  CHECK(j25["all_consistent"] == true);
  CHECK(j25["family_b"]["gk2"]["status"] == "violation");
  CHECK(j25["family_b"]["gk2"]["budget_stats"]["focus_points"].size() == 3);
}

TEST_CASE("--out writes the report to a file instead of stdout") {
  const std::string path = "cli_out_test.json";
  const auto r = run(with_budget(
      {"classify", "--fn", "mono(s)", "--out", path}));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  const auto j = fsc::json::parse(buf.str());
  CHECK(j["verdict"]["status"] == "proven_member");
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("usage and evaluation errors exit 2") {
  CHECK(run({"classify"}).code == 2);                      // missing --fn
  CHECK(run({"classify", "--fn", "mono(s)", "--sense", "3"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"classify", "--fn", "mono(s)", "--alpha", "2"}).code == 2);
  CHECK(run({"classify", "--fn", "mono(s"}).code == 2);    // parse error
  CHECK(run({"calc", "integrate", "--fn", "fb(1) / (mono(1) - mono(1))",
             "--from", "0", "--to", "1"}).code == 2);      // eval error
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
}
