#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crestlab/crest.hpp"
#include "crestlab/solvers/record.hpp"

namespace crestlab::io {

namespace fs = std::filesystem;
using json = nlohmann::json;

/// Full-precision, locale-independent double formatting (round-trips exactly).
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Write-then-rename so outputs only ever appear complete.
inline void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw config_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out.good()) throw config_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, path);
}

inline void write_json(const fs::path& path, const json& j) {
  write_atomic(path, j.dump(2) + "\n");
}

inline json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open: " + path.string());
  json j;
  in >> j;
  return j;
}

// ---------------------------------------------------------------- CrestSeries

inline std::string crest_series_csv(const CrestSeries& s) {
  if (s.samples.empty()) throw config_error("crest series is empty; nothing to export");
  std::ostringstream out;
  out << "t,variant,sup_norm,denom,C_f\n";
  for (const auto& c : s.samples)
    out << format_double(c.t) << ',' << to_string(c.variant) << ','
        << format_double(c.sup_norm) << ',' << format_double(c.denom) << ','
        << format_double(c.C_f) << '\n';
  return out.str();
}

inline void write_crest_series(const fs::path& path, const CrestSeries& s) {
  write_atomic(path, crest_series_csv(s));
}

inline CrestSeries read_crest_series(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw config_error("empty crest series file");
  if (line.rfind("t,variant,sup_norm,denom,C_f", 0) != 0)
    throw config_error("unexpected crest series header: " + line);
  CrestSeries s;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f0, f1, f2, f3, f4;
    if (!std::getline(ls, f0, ',') || !std::getline(ls, f1, ',') ||
        !std::getline(ls, f2, ',') || !std::getline(ls, f3, ',') ||
        !std::getline(ls, f4, ','))
      throw config_error("malformed crest series row: " + line);
    CrestSample c;
    c.t = std::stod(f0);
    c.variant = crest_variant_from_string(f1);
    c.sup_norm = std::stod(f2);
    c.denom = std::stod(f3);
    c.C_f = std::stod(f4);
    s.samples.push_back(c);
  }
  return s;
}

// ----------------------------------------------------------------- NormLedger

inline std::string ledger_csv(const NormLedger& led) {
  if (led.samples.empty()) throw config_error("ledger is empty; nothing to export");
  std::ostringstream out;
  out << "t,J0,J1,J2,F0,F1,F2\n";
  for (const auto& s : led.samples) {
    out << format_double(s.t);
    for (int n = 0; n < 3; ++n) out << ',' << format_double(s.J.at(n));
    for (int n = 0; n < 3; ++n) out << ',' << format_double(s.F.at(n));
    out << '\n';
  }
  return out.str();
}

inline void write_ledger(const fs::path& path, const NormLedger& led) {
  write_atomic(path, ledger_csv(led));
}

struct LedgerData {
  std::vector<double> t, J0, J1, J2, F0, F1, F2;
};

inline LedgerData read_ledger(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,J0,J1,J2,F0,F1,F2", 0) != 0)
    throw config_error("unexpected ledger header");
  LedgerData d;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> row;
    while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
    if (row.size() != 7) throw config_error("malformed ledger row: " + line);
    d.t.push_back(row[0]);
    d.J0.push_back(row[1]);
    d.J1.push_back(row[2]);
    d.J2.push_back(row[3]);
    d.F0.push_back(row[4]);
    d.F1.push_back(row[5]);
    d.F2.push_back(row[6]);
  }
  return d;
}

// ------------------------------------------------------- auxiliary series CSV

inline std::string aux_series_csv(const solvers::TrajectoryRecord& rec) {
  std::ostringstream out;
  out << "t,du_inf,omega_inf,omega_l2\n";
  const auto ts = rec.ledger.series_t();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    out << format_double(ts[i]) << ','
        << format_double(i < rec.du_inf.size() ? rec.du_inf[i] : 0.0) << ','
        << format_double(i < rec.omega_inf.size() ? rec.omega_inf[i] : 0.0) << ','
        << format_double(i < rec.omega_l2.size() ? rec.omega_l2[i] : 0.0) << '\n';
  }
  return out.str();
}

struct AuxSeries {
  std::vector<double> t, du_inf, omega_inf, omega_l2;
};

inline AuxSeries read_aux_series(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,du_inf,omega_inf,omega_l2", 0) != 0)
    throw config_error("unexpected series header");
  AuxSeries a;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> row;
    while (std::getline(ls, tok, ',')) row.push_back(std::stod(tok));
    if (row.size() != 4) throw config_error("malformed series row: " + line);
    a.t.push_back(row[0]);
    a.du_inf.push_back(row[1]);
    a.omega_inf.push_back(row[2]);
    a.omega_l2.push_back(row[3]);
  }
  return a;
}

// ------------------------------------------------------------- field snapshot

/// Header `d,L,N,components`, then the physical samples row-major, one per line.
inline void write_field_snapshot(const fs::path& path, const SpectralField& f) {
  const RealField r = to_physical(f);
  std::ostringstream out;
  out << r.grid.d << ',' << format_double(r.grid.L) << ',' << r.grid.N << ','
      << r.components() << '\n';
  for (const auto& comp : r.comp)
    for (double v : comp) out << format_double(v) << '\n';
  write_atomic(path, out.str());
}

inline SpectralField read_field_snapshot(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw config_error("empty snapshot file");
  std::istringstream hs(line);
  std::string tok;
  std::vector<std::string> head;
  while (std::getline(hs, tok, ',')) head.push_back(tok);
  if (head.size() != 4) throw config_error("bad snapshot header: " + line);
  RealField r;
  r.grid = PeriodicGrid(std::stoi(head[0]), std::stod(head[1]), std::stoi(head[2]));
  const int ncomp = std::stoi(head[3]);
  r.comp.assign(ncomp, {});
  for (auto& comp : r.comp) {
    comp.reserve(r.grid.points());
    for (std::size_t i = 0; i < r.grid.points(); ++i) {
      if (!std::getline(in, line)) throw config_error("snapshot truncated");
      comp.push_back(std::stod(line));
    }
  }
  return to_spectral(r);
}

// ------------------------------------------------------ GNI calibration store

inline fs::path default_calibration_path(const fs::path& root) {
  return root / "gni_calibration.json";
}

inline void save_gni_entry(const fs::path& path, int n, int d,
                           const GniConstants::Entry& e) {
  json j;
  if (fs::exists(path)) j = read_json(path);
  if (!j.contains("entries")) j["entries"] = json::array();
  // replace any matching (n, d, L, N) entry
  json filtered = json::array();
  for (const auto& it : j["entries"])
    if (!(it["n"] == n && it["d"] == d && it["N"] == e.N &&
          std::abs(it["L"].get<double>() - e.L) < 1e-12))
      filtered.push_back(it);
  filtered.push_back(json{{"n", n},
                          {"d", d},
                          {"L", e.L},
                          {"N", e.N},
                          {"c", e.c},
                          {"kmax", e.kmax},
                          {"seed", e.seed},
                          {"fields", e.fields}});
  j["entries"] = filtered;
  write_json(path, j);
}

inline GniConstants load_gni_table(const fs::path& path) {
  GniConstants g;
  if (!fs::exists(path)) return g;
  const json j = read_json(path);
  if (!j.contains("entries")) return g;
  for (const auto& it : j["entries"]) {
    GniConstants::Entry e;
    e.c = it.at("c").get<double>();
    e.L = it.at("L").get<double>();
    e.N = it.at("N").get<int>();
    e.kmax = it.value("kmax", 0);
    e.seed = it.value("seed", std::uint64_t{0});
    e.fields = it.value("fields", 0);
    g.table[{it.at("n").get<int>(), it.at("d").get<int>()}] = e;
  }
  return g;
}

}  // namespace crestlab::io
