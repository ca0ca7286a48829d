#include <catch2/catch.hpp>

#include <fstream>

#include "crestlab/runner.hpp"

using namespace crestlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "crestlab-test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("parse_config: minimal heat scenario is valid") {
  const Scenario s = parse_config_text(
      "equation = heat\n"
      "[initial]\n"
      "modes = s,1,1.0\n");
  REQUIRE(s.equation == Equation::heat);
  REQUIRE(s.modes.size() == 1);
  REQUIRE(s.modes[0].k0 == 1);
}

TEST_CASE("parse_config: zero-mean forcing violation is rejected with the field name") {
  const std::string cfg =
      "equation = nse2d\n"
      "[domain]\nd = 2\n"
      "[initial]\npreset = taylor_green\n"
      "[forcing]\ntype = modes\nmodes = c,0,0,1.0\n";
  try {
    parse_config_text(cfg);
    FAIL("expected rejection");
  } catch (const config_error& e) {
    REQUIRE(std::string(e.what()).find("forcing.modes") != std::string::npos);
    REQUIRE(std::string(e.what()).find("zero-mean") != std::string::npos);
  }
}

TEST_CASE("parse_config: proviso violation is rejected when taf checks are requested") {
  // huge nu makes tau^2 Phi_0 <= 1
  const std::string cfg =
      "equation = nse2d\n"
      "[domain]\nd = 2\nN = 64\n"
      "[physics]\nnu = 1e6\n"
      "[initial]\npreset = taylor_green\n"
      "[forcing]\ntype = single_mode_x\nk0 = 2\namplitude = 1e-6\n"
      "[outputs]\nverify = taf\n";
  try {
    parse_config_text(cfg);
    FAIL("expected rejection");
  } catch (const config_error& e) {
    REQUIRE(std::string(e.what()).find("proviso") != std::string::npos);
    REQUIRE(std::string(e.what()).find("tau^2 Phi_0") != std::string::npos);
  }
}

TEST_CASE("parse_config: unknown keys and malformed values are named") {
  try {
    parse_config_text("equation = heat\nbogus = 1\n[initial]\nmodes = s,1,1.0\n");
    FAIL("expected rejection");
  } catch (const config_error& e) {
    REQUIRE(std::string(e.what()).find("unknown key: bogus") != std::string::npos);
  }
  try {
    parse_config_text(
        "equation = heat\n[physics]\nkappa = fast\n[initial]\nmodes = s,1,1.0\n");
    FAIL("expected rejection");
  } catch (const config_error& e) {
    REQUIRE(std::string(e.what()).find("physics.kappa") != std::string::npos);
  }
}

TEST_CASE("parse_config: JSON input is accepted") {
  const fs::path dir = fresh_dir("json-config");
  const fs::path cfg = dir / "scenario.json";
  io::write_atomic(cfg, R"({
    "name": "json-run",
    "equation": "nse2d",
    "domain": {"d": 2, "N": 32},
    "initial": {"preset": "taylor_green"},
    "time": {"T": 0.5}
  })");
  const Scenario s = parse_config(cfg);
  REQUIRE(s.name == "json-run");
  REQUIRE(s.equation == Equation::nse2d);
  REQUIRE(s.N == 32);
}

TEST_CASE("csv schemas match the documented headers exactly") {
  CrestSeries cs;
  cs.samples.push_back({0.5, CrestVariant::bounded, 2.0, 1.0, 2.0});
  const std::string ccsv = io::crest_series_csv(cs);
  REQUIRE(ccsv.rfind("t,variant,sup_norm,denom,C_f\n", 0) == 0);

  NormLedger led;
  led.tau = 1.0;
  led.phi = {1.0, 1.0, 1.0};
  led.append(0.0, {1.0, 2.0, 3.0});
  const std::string lcsv = io::ledger_csv(led);
  REQUIRE(lcsv.rfind("t,J0,J1,J2,F0,F1,F2\n", 0) == 0);
}

TEST_CASE("crest series round-trips through CSV") {
  CrestSeries cs;
  for (int i = 0; i < 10; ++i)
    cs.samples.push_back({0.1 * i, CrestVariant::forced, 1.0 + i, 2.0, (1.0 + i) / 2.0});
  const fs::path dir = fresh_dir("crest-roundtrip");
  io::write_crest_series(dir / "c.csv", cs);
  const CrestSeries back = io::read_crest_series(dir / "c.csv");
  REQUIRE(back.samples.size() == cs.samples.size());
  for (std::size_t i = 0; i < cs.samples.size(); ++i) {
    REQUIRE(back.samples[i].t == cs.samples[i].t);
    REQUIRE(back.samples[i].C_f == cs.samples[i].C_f);
    REQUIRE(back.samples[i].variant == cs.samples[i].variant);
  }
}

TEST_CASE("field snapshot round-trips") {
  PeriodicGrid g(2, 2 * pi, 16);
  std::mt19937_64 rng(301);
  const SpectralField f = random_band_limited(g, 1, 5, rng);
  const fs::path dir = fresh_dir("snapshot");
  io::write_field_snapshot(dir / "snap.csv", f);
  const std::string head = slurp(dir / "snap.csv").substr(0, 64);
  REQUIRE(head.rfind("2,", 0) == 0);  // header line `d,L,N,components`
  const SpectralField back = io::read_field_snapshot(dir / "snap.csv");
  for (std::size_t i = 0; i < f[0].size(); ++i)
    REQUIRE(std::abs(back[0][i] - f[0][i]) < 1e-12);
}

TEST_CASE("empty outputs are refused before any file appears") {
  const fs::path dir = fresh_dir("atomicity");
  CrestSeries empty;
  REQUIRE_THROWS_AS(io::write_crest_series(dir / "c.csv", empty), config_error);
  REQUIRE_FALSE(fs::exists(dir / "c.csv"));
  REQUIRE_FALSE(fs::exists(dir / "c.csv.tmp"));
}

TEST_CASE("run_scenario: identical scenario and seed give byte-identical outputs") {
  const std::string cfg =
      "name = det\n"
      "equation = nse2d\n"
      "[domain]\nd = 2\nN = 32\n"
      "[physics]\nnu = 0.05\n"
      "[initial]\npreset = random_band\nkmax = 4\nseed = 11\n"
      "[forcing]\ntype = single_mode_x\nk0 = 2\namplitude = 0.2\n"
      "[time]\nT = 2.0\nsample_every = 2\n"
      "[outputs]\nverify = taf,residuals\n";
  const Scenario s = parse_config_text(cfg);
  const fs::path root_a = fresh_dir("det-a");
  const fs::path root_b = fresh_dir("det-b");
  runner::run_scenario(s, root_a);
  runner::run_scenario(s, root_b);
  for (const char* f : {"crest_bounded.csv", "crest_forced.csv", "ledger.csv",
                        "series.csv", "snapshot_final.csv"})
    REQUIRE(slurp(root_a / "det" / f) == slurp(root_b / "det" / f));
}

TEST_CASE("run_scenario: heat scenario produces the expected artifacts") {
  const Scenario s = parse_config_text(
      "name = heat-demo\n"
      "equation = heat\n"
      "[domain]\nN = 64\n"
      "[physics]\nkappa = 0.5\n"
      "[initial]\nmodes = s,1,1.0\n"
      "[time]\nT = 2.0\n");
  const fs::path root = fresh_dir("heat-run");
  const runner::RunResult r = runner::run_scenario(s, root);
  REQUIRE(fs::exists(r.dir / "crest_bounded.csv"));
  REQUIRE(fs::exists(r.dir / "ledger.csv"));
  REQUIRE(fs::exists(r.dir / "scenario.json"));
  REQUIRE(fs::exists(r.dir / "snapshot_final.csv"));
  // single-mode heat: constant crest factor sqrt(2)
  const CrestSeries cs = io::read_crest_series(r.dir / "crest_bounded.csv");
  for (const auto& c : cs.samples)
    REQUIRE(c.C_f == Approx(std::sqrt(2.0)).epsilon(1e-6));
}

TEST_CASE("verify_directory reproduces the run verification") {
  const Scenario s = parse_config_text(
      "name = nse-verify\n"
      "equation = nse2d\n"
      "[domain]\nd = 2\nN = 32\n"
      "[physics]\nnu = 0.05\n"
      "[initial]\npreset = taylor_green\namplitude = 0.5\n"
      "[forcing]\ntype = single_mode_x\nk0 = 2\namplitude = 0.2\n"
      "[time]\nT = 5.0\nsample_every = 2\n"
      "[outputs]\nverify = taf,bound2d,residuals\n");
  const fs::path root = fresh_dir("verify-run");
  const runner::RunResult r = runner::run_scenario(s, root);
  REQUIRE(r.all_checks_passed);

  const io::json again = runner::verify_directory(r.dir);
  REQUIRE(again["checks"].size() == r.verification["checks"].size());
  for (std::size_t i = 0; i < again["checks"].size(); ++i) {
    REQUIRE(again["checks"][i]["check"] == r.verification["checks"][i]["check"]);
    REQUIRE(again["checks"][i]["pass"] == r.verification["checks"][i]["pass"]);
  }
}

TEST_CASE("oracle scenarios emit series with the documented schema and verdicts") {
  Scenario s;
  s.equation = Equation::oracle_stokes2;
  s.name = s.out_dir = "stokes2-mini";
  s.U0 = 1.0;
  s.Omega0 = 2.0;
  s.nu = 1.0;
  s.samples = 640;
  const fs::path root = fresh_dir("oracle-run");
  const runner::RunResult r = runner::run_scenario(s, root);
  REQUIRE(r.all_checks_passed);
  REQUIRE(r.classification["verdict"] == "periodic_or_quasiperiodic");
  // period pi/Omega0 detected within 2%
  const double period = r.classification["stats"]["dominant_period"].get<double>();
  REQUIRE(period == Approx(pi / 2.0).epsilon(0.02));
}
