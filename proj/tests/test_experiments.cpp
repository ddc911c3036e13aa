#include "doctest.h"
#include "orderscope/experiments.hpp"
#include "orderscope/report.hpp"

using namespace osc;

TEST_CASE("pigeonhole experiment at small n") {
  for (int n : {2, 3, 4}) {
    Report r = experiment_pigeonhole(n, 16, 5);
    CHECK(r.all_pass());
    // the first check records the exact equal-gap distance
    CHECK(r.checks[0].actual == rat_str(Rat(1, 2 * n)));
  }
}

TEST_CASE("codeleted experiment at depths 0, 1 and 2") {
  Report r0 = experiment_codeleted(0);
  CHECK(r0.all_pass());
  Report r1 = experiment_codeleted(1);
  CHECK(r1.all_pass());
  bool has_essential = false;
  for (const auto& c : r1.checks)
    if (c.name == "image loop is essential") has_essential = c.pass;
  CHECK(has_essential);
  Report r2 = experiment_codeleted(2);
  CHECK(r2.all_pass());
  for (const auto& c : r2.checks)
    if (c.name == "image diameter <= 2^{-n}") CHECK(c.actual == "1/4");
  CHECK_THROWS_AS(experiment_codeleted(3), Error);
}

TEST_CASE("sphere-nerve experiment") {
  Report r = experiment_sphere_nerve(1);
  CHECK(r.all_pass());
}

TEST_CASE("fuzz suites pass at reduced trial counts") {
  CHECK(experiment_isometry_fuzz(60, 2).all_pass());
  CHECK(experiment_chain_formula_fuzz(60, 3).all_pass());
  CHECK(experiment_metric_bounds(60, 4).all_pass());
  CHECK(experiment_factor2(60, 5).all_pass());
  CHECK(experiment_bonding_fuzz(30, 6).all_pass());
  CHECK(experiment_lcu_fuzz(40, 7).all_pass());
  CHECK(experiment_hmc_fuzz(10, 8).all_pass());
}

TEST_CASE("ipvd exhaustive at small size") {
  Report r = experiment_ipvd(4);
  CHECK(r.all_pass());
}

TEST_CASE("hahn fixture") {
  Report r = experiment_hahn_fixture();
  CHECK(r.all_pass());
}

TEST_CASE("tower on the circle fixture") {
  Report r = experiment_tower_circle();
  CHECK(r.all_pass());
}

TEST_CASE("reports are deterministic and serializable") {
  Report a = experiment_isometry_fuzz(25, 99);
  Report b = experiment_isometry_fuzz(25, 99);
  CHECK(report_json(a) == report_json(b));
  Report c = experiment_isometry_fuzz(25, 100);
  CHECK(report_json(a) != report_json(c));
  CHECK(report_csv(a).find("isometry-fuzz") != std::string::npos);
}
