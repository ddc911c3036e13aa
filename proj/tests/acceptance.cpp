// Acceptance suite: every headline quantity the library promises, one
// pass/fail line per criterion, exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "orderscope/build.hpp"
#include "orderscope/experiments.hpp"
#include "orderscope/metric_paths.hpp"
#include "orderscope/random_gen.hpp"

using namespace osc;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, long budget_ms,
               const std::function<bool(std::string&)>& run) {
  std::string detail;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (ms > budget_ms) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++failures;
  std::printf("[%s] %2d. %s (%ld ms)%s\n", ok ? "PASS" : "FAIL", number, name.c_str(), ms,
              detail.empty() ? "" : ("  -- " + detail).c_str());
  std::fflush(stdout);
}

Rat q(const char* s) { return parse_rat(s); }

}  // namespace

int main() {
  // 1. the two worked examples, exact values
  criterion(1, "worked-example distances 1/2, 1/4, 1, 1/2", 5000, [](std::string& detail) {
    Poset p = validate_poset({"0", "a", "ab", "abc", "c"},
                             {{"0", "a"}, {"a", "ab"}, {"ab", "abc"}, {"0", "c"}, {"c", "abc"}});
    BasePtr base = make_base(p);
    Injection incl(5);
    incl[p.index_of("0")] = {};
    incl[p.index_of("a")] = {"a"};
    incl[p.index_of("ab")] = {"a", "b"};
    incl[p.index_of("abc")] = {"a", "b", "c"};
    incl[p.index_of("c")] = {"c"};
    Injection reemb = incl;
    reemb[p.index_of("c")] = {"b"};
    RPoint x = make_rpoint_labels(base, {"0", "a", "ab", "abc"},
                                  {q("1/4"), q("1/4"), q("1/4"), q("1/4")});
    RPoint y = make_rpoint_labels(base, {"0", "c", "abc"}, {q("1/4"), q("1/4"), q("1/2")});
    bool first = dist_j(x, y, incl) == q("1/2") && dist_j(x, y, reemb) == q("1/4");

    Poset p2 = validate_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
    BasePtr b2 = make_base(p2);
    Injection incl2(3);
    incl2[p2.index_of("0")] = {};
    incl2[p2.index_of("a")] = {"a"};
    incl2[p2.index_of("b")] = {"b"};
    Injection reemb2 = incl2;
    reemb2[p2.index_of("a")] = {"a", "b"};
    RPoint x2 = make_rpoint_labels(b2, {"0", "a"}, {q("1/2"), q("1/2")});
    RPoint y2 = vertex_point(b2, p2.index_of("b"));
    bool second = dist_j(x2, y2, incl2) == 1 && dist_j(x2, y2, reemb2) == q("1/2");
    detail = "values " + rat_str(dist_j(x, y, incl)) + ", " + rat_str(dist_j(x, y, reemb)) +
             ", " + rat_str(dist_j(x2, y2, incl2)) + ", " + rat_str(dist_j(x2, y2, reemb2));
    return first && second;
  });

  criterion(2, "isometry fuzz, 1000 embeddings", 30000, [](std::string& detail) {
    Report r = experiment_isometry_fuzz(1000, 2026);
    detail = std::to_string(r.failures()) + " failing checks";
    return r.all_pass();
  });

  criterion(3, "chain-pair formula on 500 random pairs", 10000, [](std::string& detail) {
    Report r = experiment_chain_formula_fuzz(500, 2027);
    detail = std::to_string(r.failures()) + " failing checks";
    return r.all_pass();
  });

  criterion(4, "metric sandwich dist <= d3 <= 9 dist on 500 pairs", 60000,
            [](std::string& detail) {
              Report r = experiment_metric_bounds(500, 2028);
              for (const auto& c : r.checks)
                if (c.name == "worst observed ratio") detail = "worst ratio " + c.actual;
              return r.all_pass();
            });

  criterion(5, "factor-2 subdivision law on 500 same-chain pairs", 30000,
            [](std::string& detail) {
              Report r = experiment_factor2(500, 2029);
              detail = std::to_string(r.failures()) + " failing checks";
              return r.all_pass();
            });

  criterion(6, "boundary coverage exactly 1/(2n) for n = 2..8", 10000,
            [](std::string& detail) {
              for (int n = 2; n <= 8; ++n) {
                Report r = experiment_pigeonhole(n, 24, 77);
                if (!r.all_pass()) {
                  detail = "n = " + std::to_string(n);
                  return false;
                }
              }
              return true;
            });

  criterion(7, "co-deleted tower: diameter 1/2 and essential cycle at depth 1", 30000,
            [](std::string& detail) {
              Report r = experiment_codeleted(1);
              detail = std::to_string(r.failures()) + " failing checks";
              return r.all_pass();
            });

  criterion(8, "sphere versus contractible nerve with simplicial retractions", 60000,
            [](std::string& detail) {
              Report r = experiment_sphere_nerve(1);
              detail = std::to_string(r.failures()) + " failing checks";
              return r.all_pass();
            });

  criterion(9, "intersection poset equals Venn diagram iff conditionally complete, size 6",
            60000, [](std::string& detail) {
              Report r = experiment_ipvd(6);
              for (const auto& c : r.checks)
                if (c.name == "atomic posets examined") detail = c.actual + " atomic posets";
              return r.all_pass();
            });

  criterion(10, "bonding certification on 200 star-refining pairs", 30000,
            [](std::string& detail) {
              Report r = experiment_bonding_fuzz(200, 2030);
              for (const auto& c : r.checks)
                if (c.name == "hereditary pairs found") detail = c.actual + " hereditary pairs";
              return r.all_pass();
            });

  criterion(11, "replacement pipeline certificates on the fixtures", 30000,
            [](std::string& detail) {
              Report r = experiment_hahn_fixture();
              detail = std::to_string(r.failures()) + " failing checks";
              return r.all_pass();
            });

  criterion(12, "staircase bounds and stability on 200 trials", 30000,
            [](std::string& detail) {
              Report r = experiment_lcu_fuzz(200, 2031);
              detail = std::to_string(r.failures()) + " failing checks";
              return r.all_pass();
            });

  criterion(13, "nerve tower contraction and separation on the circle", 30000,
            [](std::string& detail) {
              Report r = experiment_tower_circle();
              detail = std::to_string(r.failures()) + " failing checks";
              return r.all_pass();
            });

  if (failures == 0) {
    std::printf("acceptance: all 13 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
