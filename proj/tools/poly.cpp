// poly — command-line driver for the finite-poset realization toolkit.
//
//   poly validate <file>
//   poly op <name> --in <file> [--out <file>] [--n K]
//   poly verify <suite> [--trials N] [--seed S] [--out report.json] [--csv]
//   poly experiment <pigeonhole|codeleted|sphere-nerve|tower> [--n K] [--spec file]
//
// All values in file formats are exact; rationals are "p/q" strings.

#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "orderscope/build.hpp"
#include "orderscope/experiments.hpp"
#include "orderscope/io.hpp"
#include "orderscope/z2.hpp"

using namespace osc;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    save_text_file(out_path, text);
}

int finish_report(const Report& r, const std::string& out_path, bool csv,
                  std::chrono::steady_clock::time_point started) {
  emit(csv ? report_csv(r) : report_json(r), out_path);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  for (const auto& c : r.checks)
    std::cerr << (c.pass ? "pass" : "FAIL") << "  " << r.suite << ": " << c.name
              << (c.actual.empty() ? "" : " [" + c.actual + "]") << "\n";
  std::cerr << r.suite << ": " << (r.all_pass() ? "all checks passed" : "CHECKS FAILED")
            << " (" << ms << " ms)\n";
  return r.all_pass() ? 0 : 1;
}

int cmd_validate(const std::string& path) {
  Json j = load_json_file(path);
  if (j.contains("elements")) {
    Preposet p = preposet_from_json(j);
    Poset closed = transitive_closure(p);
    std::cout << "valid preposet: " << p.n() << " elements, "
              << edge_pairs(p).size() << " edges\n";
    std::cout << "conditionally complete closure: "
              << (is_conditionally_complete(closed) ? "yes" : "no") << "\n";
    std::cout << "atomic closure: " << (is_atomic(closed) ? "yes" : "no") << "\n";
    return 0;
  }
  if (j.contains("ground")) {
    Cover c = cover_from_json(j);
    std::cout << "valid cover: " << c.n_sets() << " sets over " << c.n_ground()
              << " points\n";
    return 0;
  }
  if (j.contains("points")) {
    FiniteMetric m = metric_from_json(j);
    std::cout << "valid metric space: " << m.n() << " points\n";
    return 0;
  }
  if (j.contains("assign")) {
    MonotoneMap f = map_from_json(j);
    std::cout << "valid monotone map: " << f.source.n() << " -> " << f.target.n()
              << " elements\n";
    return 0;
  }
  if (j.contains("values")) {
    SampledMap f = sampled_map_from_json(j);
    std::cout << "valid sampled map: " << f.domain.n() << " samples, gamma "
              << rat_str(f.gamma) << ", delta " << rat_str(f.delta) << "\n";
    return 0;
  }
  fail(Errc::BadInput, "unrecognized input shape");
}

Json binary_input(const Json& j, const char* op) {
  if (!j.contains("left") || !j.contains("right"))
    fail(Errc::BadInput, std::string(op) + " needs {\"left\":...,\"right\":...}");
  return j;
}

int cmd_op(const std::string& name, const std::string& in_path, const std::string& out_path,
           int n_arg) {
  Json j = load_json_file(in_path);
  Json out;
  if (name == "closure") {
    out = poset_to_json(transitive_closure(preposet_from_json(j)));
  } else if (name == "dual") {
    out = poset_to_json(dual(poset_from_json(j)));
  } else if (name == "cone") {
    out = poset_to_json(cone(poset_from_json(j)));
  } else if (name == "dual-cone") {
    out = poset_to_json(dual_cone(poset_from_json(j)));
  } else if (name == "codeleted") {
    out = preposet_to_json(codeleted_prejoin(preposet_from_json(j)));
  } else if (name == "barycentric") {
    out = poset_to_json(barycentric(preposet_from_json(j)));
  } else if (name == "canonical") {
    out = subdivision_to_json(canonical(poset_from_json(j)));
  } else if (name == "canonical-preposet") {
    out = subdivision_to_json(canonical_preposet(preposet_from_json(j)));
  } else if (name == "h-dual") {
    out = poset_to_json(h_dual(poset_from_json(j)));
  } else if (name == "iterate-canonical") {
    Ladder ld = iterate_canonical(poset_from_json(j), n_arg);
    out = n_arg >= 1 ? subdivision_to_json(ld.steps.back()) : poset_to_json(ld.top());
  } else if (name == "product") {
    Json b = binary_input(j, "product");
    out = poset_to_json(product(poset_from_json(b["left"]), poset_from_json(b["right"])));
  } else if (name == "ordinal-sum") {
    Json b = binary_input(j, "ordinal-sum");
    out = poset_to_json(ordinal_sum(poset_from_json(b["left"]), poset_from_json(b["right"])));
  } else if (name == "disjoint-union") {
    Json b = binary_input(j, "disjoint-union");
    out = poset_to_json(
        disjoint_union(poset_from_json(b["left"]), poset_from_json(b["right"])));
  } else if (name == "join") {
    Json b = binary_input(j, "join");
    out = preposet_to_json(
        join_preposet(preposet_from_json(b["left"]), preposet_from_json(b["right"])));
  } else if (name == "mc-lower" || name == "mc-upper") {
    out = preposet_to_json(mapping_cylinder(
        map_from_json(j),
        name == "mc-lower" ? CylinderVariant::Lower : CylinderVariant::Upper));
  } else if (name == "hmc") {
    out = poset_to_json(hmc(map_from_json(j)));
  } else if (name == "subdiv-map") {
    out = map_to_json(subdiv_map(map_from_json(j)));
  } else if (name == "nerve") {
    out = poset_to_json(nerve(cover_from_json(j)).poset);
  } else if (name == "ip") {
    out = poset_to_json(ip(cover_from_json(j)).poset);
  } else if (name == "vd") {
    out = poset_to_json(vd(cover_from_json(j)).poset);
  } else if (name == "shrink") {
    Json b = binary_input(j, "shrink");
    out = cover_to_json(shrink(cover_from_json(b["left"]), cover_from_json(b["right"])));
  } else if (name == "bonding") {
    Json b = binary_input(j, "bonding");
    out = map_to_json(bonding(cover_from_json(b["left"]), cover_from_json(b["right"])).map);
  } else if (name == "lebesgue") {
    if (!j.contains("metric") || !j.contains("cover"))
      fail(Errc::BadInput, "lebesgue needs {\"metric\":...,\"cover\":...}");
    FiniteMetric m = metric_from_json(j["metric"]);
    Cover c = cover_from_json(j["cover"], m);
    auto l = lebesgue(c);
    out["lebesgue"] = l ? rat_str(*l) : "unbounded";
  } else if (name == "atoms") {
    Poset p = poset_from_json(j);
    Json a = Json::array();
    for (int i : atoms(p)) a.push_back(p.labels[i]);
    out["atoms"] = a;
    out["atomic"] = is_atomic(p);
  } else if (name == "conditionally-complete") {
    out["conditionally_complete"] = is_conditionally_complete(poset_from_json(j));
  } else if (name == "betti") {
    Preposet p = preposet_from_json(j);
    Json b = Json::array();
    for (long v : betti_z2(order_complex(p))) b.push_back(v);
    out["betti_z2"] = b;
  } else {
    fail(Errc::BadInput, "unknown op '" + name + "'");
  }
  emit(out.dump(2) + "\n", out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite posets, exact sup-metric realizations, covers and nerves"};
  app.require_subcommand(1);

  std::string in_path, out_path, spec_path, name;
  long trials = 0;
  uint64_t seed = 1;
  int n_arg = 1;
  bool csv = false;

  auto* validate = app.add_subcommand("validate", "validate a JSON input file");
  validate->add_option("file", in_path)->required();

  auto* op = app.add_subcommand("op", "apply a named operation to a JSON input");
  op->add_option("name", name)->required();
  op->add_option("--in", in_path)->required();
  op->add_option("--out", out_path);
  op->add_option("--n", n_arg);

  auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
  verify->add_option("suite", name)->required();
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);
  verify->add_option("--n", n_arg);
  verify->add_option("--out", out_path);
  verify->add_flag("--csv", csv);

  auto* experiment = app.add_subcommand("experiment", "reproduce a quantitative construction");
  experiment->add_option("name", name)->required();
  experiment->add_option("--n", n_arg);
  experiment->add_option("--spec", spec_path);
  experiment->add_option("--out", out_path);
  experiment->add_flag("--csv", csv);
  experiment->add_option("--seed", seed);
  experiment->add_option("--trials", trials);

  CLI11_PARSE(app, argc, argv);
  auto started = std::chrono::steady_clock::now();

  try {
    if (validate->parsed()) return cmd_validate(in_path);
    if (op->parsed()) return cmd_op(name, in_path, out_path, n_arg);
    if (verify->parsed()) {
      Report r;
      if (name == "isometry")
        r = experiment_isometry_fuzz(trials ? trials : 1000, seed);
      else if (name == "chain-formula")
        r = experiment_chain_formula_fuzz(trials ? trials : 500, seed);
      else if (name == "metric-bounds")
        r = experiment_metric_bounds(trials ? trials : 500, seed);
      else if (name == "factor2")
        r = experiment_factor2(trials ? trials : 500, seed);
      else if (name == "ipvd")
        r = experiment_ipvd(n_arg > 1 ? n_arg : 6);
      else if (name == "bonding")
        r = experiment_bonding_fuzz(trials ? trials : 200, seed);
      else if (name == "lcu")
        r = experiment_lcu_fuzz(trials ? trials : 200, seed);
      else if (name == "hmc")
        r = experiment_hmc_fuzz(trials ? trials : 50, seed);
      else if (name == "hahn")
        r = experiment_hahn_fixture();
      else
        fail(Errc::BadInput, "unknown suite '" + name + "'");
      return finish_report(r, out_path, csv, started);
    }
    if (experiment->parsed()) {
      Report r;
      if (name == "pigeonhole")
        r = experiment_pigeonhole(n_arg >= 2 ? n_arg : 4, trials ? trials : 64, seed);
      else if (name == "codeleted")
        r = experiment_codeleted(n_arg);
      else if (name == "sphere-nerve")
        r = experiment_sphere_nerve(n_arg);
      else if (name == "tower") {
        if (spec_path.empty()) {
          r = experiment_tower_circle();
        } else {
          TowerSpec ts = tower_spec_from_json(load_json_file(spec_path));
          r = experiment_tower(ts.space, ts.covers);
        }
      } else {
        fail(Errc::BadInput, "unknown experiment '" + name + "'");
      }
      return finish_report(r, out_path, csv, started);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
