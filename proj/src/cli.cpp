// Copyright 2026 The Carnot Reach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carnot/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "carnot/attainability.hpp"
#include "carnot/boundary_atlas.hpp"
#include "carnot/errors.hpp"
#include "carnot/experiments.hpp"
#include "carnot/json_io.hpp"
#include "carnot/probability.hpp"
#include "carnot/second_order.hpp"

namespace carnot::cli {
namespace {

// JSON payload given inline or via --input (a path, "-" for stdin).
struct Payload {
  std::string text;
  std::string path;

  void attach(CLI::App* cmd, const std::string& what) {
    cmd->add_option("json", text, what + " as inline JSON");
    cmd->add_option("-i,--input", path, what + " from a file, - for stdin");
  }

  Json parse() const {
    std::string src = text;
    if (!path.empty()) {
      if (path == "-") {
        src.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(path);
        if (!in) throw DomainError("file_readable", "cannot read " + path);
        src.assign(std::istreambuf_iterator<char>(in), {});
      }
    }
    if (src.empty())
      throw DomainError("input_present", "no JSON input given");
    return Json::parse(src);
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DomainError("file_writable", "cannot write " + path);
  return f;
}

std::vector<int> parse_checks(const std::string& list) {
  std::vector<int> ids;
  if (list == "all") {
    for (int i = 1; i <= 10; ++i) ids.push_back(i);
    return ids;
  }
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int id = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ids.push_back(id);
    } catch (const std::logic_error&) {
      throw DomainError("check_id_range", "bad check id '" + item + "'");
    }
  }
  return ids;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reachable set of the rank-3 step-2 Carnot group"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int threads = 1;
  app.add_option("--seed", seed, "Base seed for every random choice");
  app.add_option("--threads", threads, "Worker threads (1 = sequential)")
      ->check(CLI::PositiveNumber);

  Payload payload;
  FitOptions fit_opt;
  auto add_fit_options = [&](CLI::App* cmd) {
    cmd->add_option("--max-arcs", fit_opt.max_arcs, "Pattern length cap");
    cmd->add_option("--tol", fit_opt.tol, "Residual tolerance");
    cmd->add_option("--starts", fit_opt.starts, "Random starts per pattern");
  };

  auto* endpoint_cmd = app.add_subcommand("endpoint", "Word -> group element");
  payload.attach(endpoint_cmd, "word");

  bool to_sec = false;
  auto* pqr_cmd = app.add_subcommand("pqr", "Section word -> (p, q, r)");
  payload.attach(pqr_cmd, "word");
  pqr_cmd->add_flag("--normalize", to_sec,
                    "Rescale each letter to total duration 1 first");

  std::vector<double> target;
  auto* member_cmd = app.add_subcommand("member", "Attainability of (p, q, r)");
  member_cmd->add_option("pqr", target, "p q r")->expected(3)->required();
  add_fit_options(member_cmd);

  int resolution = 9;
  bool do_probe = false;
  double eps = 1e-3;
  std::string obj_path, strata_path, samples_path;
  auto* atlas_cmd = app.add_subcommand("atlas", "Boundary strata and mesh");
  atlas_cmd->add_option("--resolution", resolution, "Grid points per side")
      ->check(CLI::Range(2, 4096));
  atlas_cmd->add_option("--obj", obj_path, "Write the boundary mesh (OBJ)");
  atlas_cmd->add_option("--strata", strata_path, "Write stratum samples (CSV)");
  atlas_cmd->add_option("--samples", samples_path,
                        "Write probed samples (CSV)");
  atlas_cmd->add_flag("--probe", do_probe, "Probe both sides of each sample");
  atlas_cmd->add_option("--eps", eps, "Probe offset");
  add_fit_options(atlas_cmd);

  double horizon = 0.0;
  bool normalize_cov = false;
  std::string switch_csv;
  auto* sim_cmd =
      app.add_subcommand("simulate-adjoint", "Covector -> extremal word");
  payload.attach(sim_cmd, "covector {\"h\":[..],\"R\":[h12,h13,h23]}");
  sim_cmd->add_option("--horizon", horizon, "Total time")->required();
  sim_cmd->add_flag("--normalize", normalize_cov,
                    "Shift h so that its largest entry is 1");
  sim_cmd->add_option("--switch-csv", switch_csv, "Write switch events (CSV)");

  auto* so_cmd = app.add_subcommand("second-order",
                                    "Second-order test of a bang-bang word");
  payload.attach(so_cmd, "{\"word\":{..},\"covector\":{..}}");

  bool dice_fit = false;
  int dice_trials = 0;
  int atoms_max = 4;
  std::string dice_csv;
  auto* dice_cmd = app.add_subcommand("dice", "Three distributions -> (p,q,r)");
  payload.attach(dice_cmd, "[d1, d2, d3], each a list of [value, mass]");
  dice_cmd->add_flag("--fit", dice_fit, "Also run the attainability solver");
  dice_cmd->add_option("--trials", dice_trials,
                       "Instead of one triple, fit this many random triples")
      ->check(CLI::PositiveNumber);
  dice_cmd->add_option("--atoms-max", atoms_max, "Atoms per random law")
      ->check(CLI::PositiveNumber);
  dice_cmd->add_option("--csv", dice_csv, "Per-trial CSV for --trials");
  add_fit_options(dice_cmd);

  std::string checks = "all";
  double scale = 1.0;
  auto* mc_cmd = app.add_subcommand("mc-verify", "Run the acceptance checks");
  mc_cmd->add_option("--check", checks, "Comma-separated ids 1..10 or all");
  mc_cmd->add_option("--scale", scale, "Multiplier on the sample counts");

  for (auto* c : app.get_subcommands({})) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  fit_opt.seed = seed;
  try {
    if (*endpoint_cmd) {
      out << dump(to_json(endpoint(word_from_json(payload.parse())))) << '\n';
    } else if (*pqr_cmd) {
      Word w = word_from_json(payload.parse());
      if (to_sec) w = to_section(w);
      out << dump(to_json(pqr(w))) << '\n';
    } else if (*member_cmd) {
      const FitResult r = fit(PqrPoint(target[0], target[1], target[2]),
                              fit_opt);
      out << dump(to_json(r)) << '\n';
    } else if (*atlas_cmd) {
      AtlasOptions opt;
      opt.eps = eps;
      opt.threads = threads;
      opt.probe = do_probe;
      const AtlasResult res =
          trim_and_mesh(resolution, make_prober(fit_opt), opt);
      if (!obj_path.empty()) {
        auto f = open_out(obj_path);
        res.mesh.write_obj(f);
      }
      if (!strata_path.empty()) {
        auto f = open_out(strata_path);
        std::vector<FacePatch> all = edge_families();
        for (auto& p : flat_triangles()) all.push_back(std::move(p));
        for (auto& p : quadric_patches()) all.push_back(std::move(p));
        write_strata_csv(f, all, resolution);
      }
      if (!samples_path.empty()) {
        auto f = open_out(samples_path);
        write_samples_csv(f, res.samples);
      }
      Json verts = Json::array();
      for (const auto& v : vertices())
        verts.push_back({{"label", v.label}, {"pqr", to_json(v.point)},
                         {"witness", to_json(v.witness)}});
      out << dump({{"vertices", verts},
                   {"mesh",
                    {{"vertices", res.mesh.vertices.size()},
                     {"faces", res.mesh.faces.size()},
                     {"groups", res.mesh.group_names},
                     {"closed", res.check.closed},
                     {"consistent_orientation",
                      res.check.consistent_orientation},
                     {"euler_characteristic", res.check.euler_characteristic},
                     {"volume", res.check.volume}}},
                   {"samples",
                    {{"total", res.samples.size()},
                     {"probed", do_probe},
                     {"agree", res.agree},
                     {"disagree", res.disagree},
                     {"undecided", res.undecided},
                     {"failed", res.failed}}}})
          << '\n';
    } else if (*sim_cmd) {
      AdjointCovector a = covector_from_json(payload.parse());
      if (normalize_cov) a = normalize(a);
      const Synthesis s = synthesize(a, horizon);
      if (!switch_csv.empty()) {
        auto f = open_out(switch_csv);
        f << "index,t,h1,h2,h3\n";
        for (std::size_t i = 0; i < s.events.size(); ++i) {
          const auto& e = s.events[i];
          f << i << ',' << format_number(e.t) << ',' << format_number(e.h[0])
            << ',' << format_number(e.h[1]) << ',' << format_number(e.h[2])
            << '\n';
        }
      }
      out << dump(to_json(s)) << '\n';
    } else if (*so_cmd) {
      const Json j = payload.parse();
      if (!j.is_object() || !j.contains("word") || !j.contains("covector"))
        throw DomainError("json_shape",
                          "second-order needs \"word\" and \"covector\"");
      const SecondOrderReport r =
          ag_test(word_from_json(j["word"]), covector_from_json(j["covector"]));
      out << dump(to_json(r)) << '\n';
    } else if (*dice_cmd && dice_trials > 0) {
      const DiceReport r = random_dice_check(
          dice_trials, atoms_max, seed,
          [&](const PqrPoint& x) { return fit(x, fit_opt); }, threads);
      if (!dice_csv.empty()) {
        auto f = open_out(dice_csv);
        write_dice_csv(f, r);
      }
      out << dump({{"trials", r.trials},
                   {"attained", r.attained},
                   {"worst_residual", r.worst_residual},
                   {"failures", r.failures}})
          << '\n';
    } else if (*dice_cmd) {
      const Json j = payload.parse();
      if (!j.is_array() || j.size() != 3)
        throw DomainError("json_shape", "dice needs three distributions");
      const DiscreteDistribution d1 = distribution_from_json(j[0]);
      const DiscreteDistribution d2 = distribution_from_json(j[1]);
      const DiscreteDistribution d3 = distribution_from_json(j[2]);
      const PqrPoint x = dice_pqr(d1, d2, d3);
      Json res = to_json(x);
      res["word"] = to_json(dice_word(d1, d2, d3));
      if (dice_fit) res["fit"] = to_json(fit(x, fit_opt));
      out << dump(res) << '\n';
    } else if (*mc_cmd) {
      const auto reports = run_checks(parse_checks(checks), scale, seed,
                                      threads);
      Json arr = Json::array();
      std::string failed;
      for (const auto& r : reports) {
        arr.push_back(to_json(r));
        if (r.passed) continue;
        failed += (failed.empty() ? "" : ",") + std::to_string(r.id);
      }
      out << dump(arr) << '\n';
      if (!failed.empty())
        throw DomainError("acceptance_checks", "failed checks: " + failed);
    }
  } catch (const DomainError& e) {
    err << dump({{"error", e.what()}, {"invariant", e.invariant()}}) << '\n';
    return kExitDomainError;
  } catch (const Json::exception& e) {
    err << dump({{"error", e.what()}, {"invariant", "json_well_formed"}})
        << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace carnot::cli
