// crestlab command-line front end: scenario execution, offline verification,
// crest-series classification and GNI constant calibration.

#include <cstdlib>
#include <future>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "crestlab/runner.hpp"

namespace fs = std::filesystem;
using namespace crestlab;

namespace {

fs::path output_root(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("CRESTLAB_OUT")) return env;
  return "crestlab-out";
}

void print_checks(const io::json& verification) {
  if (!verification.contains("checks")) return;
  for (const auto& c : verification["checks"]) {
    std::cout << (c.value("pass", false) ? "[PASS] " : "[FAIL] ")
              << c.value("check", std::string{"?"}) << '\n';
  }
}

int finish_run(const runner::RunResult& result) {
  std::cout << "outputs written to " << result.dir.string() << '\n';
  print_checks(result.verification);
  if (!result.classification.is_null())
    std::cout << "verdict: " << result.classification.value("verdict", std::string{})
              << '\n';
  return result.all_checks_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral PDE crest-factor toolkit"};
  app.require_subcommand(1);

  std::string out_root_flag;
  app.add_option("--out-root", out_root_flag,
                 "output root (default: $CRESTLAB_OUT or ./crestlab-out)");

  // ---- run
  auto* run = app.add_subcommand("run", "execute one or more scenario configs");
  std::vector<std::string> config_paths;
  run->add_option("config", config_paths, "scenario files (key/value text or JSON)")
      ->required()
      ->expected(-1);
  std::uint64_t seed_override = 0;
  bool seed_given = false;
  run->add_option("--seed", seed_override, "override the scenario seed")
      ->each([&](const std::string&) { seed_given = true; });
  double dt_override = 0.0;
  run->add_option("--dt", dt_override, "override the time step");
  int resolution_override = 0;
  run->add_option("--resolution", resolution_override, "override the grid resolution N");

  // ---- verify
  auto* verify = app.add_subcommand("verify", "re-check bounds for a finished run");
  std::string traj_dir;
  verify->add_option("dir", traj_dir, "trajectory directory")->required();

  // ---- classify
  auto* classify_cmd = app.add_subcommand("classify", "classify a crest-series CSV");
  std::string series_path;
  classify_cmd->add_option("csv", series_path, "crest series file")->required();
  std::string classify_out;
  classify_cmd->add_option("--out", classify_out, "report path (default: stdout)");

  // ---- calibrate-gni
  auto* cal = app.add_subcommand("calibrate-gni", "calibrate the GNI constant c(n,d,L)");
  int cal_n = 2, cal_d = 2, cal_N = 64;
  double cal_L = 2 * pi;
  cal->add_option("n", cal_n, "derivative order")->required();
  cal->add_option("d", cal_d, "spatial dimension")->required();
  cal->add_option("L", cal_L, "box side length")->required();
  cal->add_option("N", cal_N, "grid resolution")->required();
  int cal_fields = 10000;
  cal->add_option("--fields", cal_fields, "ensemble size (default 10000)");
  std::uint64_t cal_seed = 20260808;
  cal->add_option("--seed", cal_seed, "ensemble seed");

  // ---- oracle
  auto* oracle = app.add_subcommand("oracle", "emit a closed-form oracle series");
  std::string oracle_name;
  oracle->add_option("name", oracle_name, "stokes2 | halfplane | burgers | stokes-green")
      ->required();
  double o_U0 = 1.0, o_Omega0 = 2.0, o_nu = 1.0, o_U = 1.0, o_T = 2.0;
  double o_tmin = 1.0, o_tmax = 1e4, o_periods = 8.0;
  int o_samples = 2048;
  std::string o_modes = "s,1,1.0";
  oracle->add_option("--U0", o_U0, "plate amplitude (stokes2)");
  oracle->add_option("--Omega0", o_Omega0, "plate frequency (stokes2)");
  oracle->add_option("--nu", o_nu, "viscosity / diffusivity");
  oracle->add_option("--U", o_U, "far-field speed (halfplane)");
  oracle->add_option("--T", o_T, "time span (burgers, stokes-green)");
  oracle->add_option("--t-min", o_tmin, "series start (halfplane)");
  oracle->add_option("--t-max", o_tmax, "series end (halfplane)");
  oracle->add_option("--periods", o_periods, "series span in periods (stokes2)");
  oracle->add_option("--samples", o_samples, "series length");
  oracle->add_option("--modes", o_modes, "initial sine modes (burgers)");
  std::string o_name;
  oracle->add_option("--run-name", o_name, "run directory name");

  CLI11_PARSE(app, argc, argv);
  const fs::path root = output_root(out_root_flag);

  try {
    if (*run) {
      std::vector<Scenario> scenarios;
      for (const auto& path : config_paths) {
        Scenario s = parse_config(path);
        if (seed_given) s.seed = seed_override;
        if (dt_override > 0.0) s.dt = dt_override;
        if (resolution_override > 0) s.N = resolution_override;
        scenarios.push_back(std::move(s));
      }
      if (scenarios.size() == 1) return finish_run(runner::run_scenario(scenarios[0], root));

      // batch execution: one worker per scenario
      std::vector<std::future<runner::RunResult>> futures;
      for (const auto& s : scenarios)
        futures.push_back(std::async(std::launch::async,
                                     [&root, s] { return runner::run_scenario(s, root); }));
      int rc = 0;
      for (auto& f : futures) rc = std::max(rc, finish_run(f.get()));
      return rc;
    }

    if (*verify) {
      const io::json v = runner::verify_directory(traj_dir);
      print_checks(v);
      for (const auto& c : v.value("checks", io::json::array()))
        if (!c.value("pass", true)) return 1;
      return 0;
    }

    if (*classify_cmd) {
      const CrestSeries series = io::read_crest_series(series_path);
      const classifier::CfStatistics st = classifier::cf_statistics(series);
      const io::json rep = runner::classification_json(classifier::classify(st));
      if (classify_out.empty())
        std::cout << rep.dump(2) << '\n';
      else
        io::write_json(classify_out, rep);
      return 0;
    }

    if (*cal) {
      const GniConstants::Entry e =
          calibrate_gni(cal_n, cal_d, cal_L, cal_N, cal_seed, cal_fields);
      const fs::path path = io::default_calibration_path(root);
      io::save_gni_entry(path, cal_n, cal_d, e);
      std::cout << "c(" << cal_n << ',' << cal_d << ",L=" << cal_L << ",N=" << cal_N
                << ") = " << io::format_double(e.c) << "\nsaved to " << path.string()
                << '\n';
      return 0;
    }

    if (*oracle) {
      Scenario s;
      s.samples = o_samples;
      s.nu = o_nu;
      if (oracle_name == "stokes2") {
        s.equation = Equation::oracle_stokes2;
        s.U0 = o_U0;
        s.Omega0 = o_Omega0;
        s.periods = o_periods;
      } else if (oracle_name == "halfplane") {
        s.equation = Equation::oracle_halfplane;
        s.U = o_U;
        s.t_min = o_tmin;
        s.t_max = o_tmax;
        s.log_spaced = true;
      } else if (oracle_name == "burgers") {
        s.equation = Equation::oracle_burgers;
        s.T = o_T;
        std::vector<std::string> errors;
        s.modes = detail::parse_modes(o_modes, errors);
        if (!errors.empty() || s.modes.empty())
          throw config_error("oracle burgers: bad --modes specification");
      } else if (oracle_name == "stokes-green") {
        s.equation = Equation::oracle_stokes_green;
        s.T = o_T;
      } else {
        throw config_error("unknown oracle '" + oracle_name + "'");
      }
      s.name = o_name.empty() ? "oracle-" + oracle_name : o_name;
      s.out_dir = s.name;
      return finish_run(runner::run_scenario(s, root));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
