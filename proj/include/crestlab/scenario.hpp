#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "crestlab/errors.hpp"
#include "crestlab/grid.hpp"

namespace crestlab {

enum class Equation {
  heat,
  wave,
  burgers,
  nse2d,
  oracle_stokes2,
  oracle_halfplane,
  oracle_burgers,
  oracle_stokes_green,
};

inline Equation equation_from_string(const std::string& s) {
  if (s == "heat") return Equation::heat;
  if (s == "wave") return Equation::wave;
  if (s == "burgers") return Equation::burgers;
  if (s == "nse2d") return Equation::nse2d;
  if (s == "oracle:stokes2") return Equation::oracle_stokes2;
  if (s == "oracle:halfplane") return Equation::oracle_halfplane;
  if (s == "oracle:burgers") return Equation::oracle_burgers;
  if (s == "oracle:stokes-green") return Equation::oracle_stokes_green;
  throw config_error("equation: unknown value '" + s + "'");
}

inline const char* to_string(Equation e) {
  switch (e) {
    case Equation::heat: return "heat";
    case Equation::wave: return "wave";
    case Equation::burgers: return "burgers";
    case Equation::nse2d: return "nse2d";
    case Equation::oracle_stokes2: return "oracle:stokes2";
    case Equation::oracle_halfplane: return "oracle:halfplane";
    case Equation::oracle_burgers: return "oracle:burgers";
    default: return "oracle:stokes-green";
  }
}

/// One explicit sine/cosine mode of an initial condition.
struct ModeSpec {
  char kind = 's';  // 's' sine, 'c' cosine
  int k0 = 1;
  int k1 = 0;
  int k2 = 0;
  double amplitude = 1.0;
};

/// Declarative description of one experiment.
struct Scenario {
  std::string name = "run";
  Equation equation = Equation::heat;

  // [domain]
  int d = 1;
  double L = 2 * pi;
  int N = 64;

  // [physics]
  double nu = 0.1;      // nu / kappa / eps depending on the equation
  double U0 = 1.0;      // stokes2 amplitude
  double Omega0 = 1.0;  // stokes2 frequency
  double U = 1.0;       // halfplane speed

  // [initial]
  std::string preset = "modes";  // modes | taylor_green | random_band | zero
  std::vector<ModeSpec> modes;
  int kmax = 4;
  std::uint64_t seed = 1;
  double amplitude = 1.0;

  // [forcing]
  std::string forcing_type = "none";  // none | single_mode_x | modes
  int forcing_k0 = 4;
  double forcing_amplitude = 1.0;
  std::vector<ModeSpec> forcing_modes;  // first velocity component

  // [time]
  double T = 1.0;
  double dt = 0.0;  // 0 = solver default
  int sample_every = 1;
  int samples = 2048;   // oracle series length
  double t_min = 1.0;   // oracle series start
  double t_max = 1e4;   // oracle series end
  bool log_spaced = false;
  double periods = 8.0;  // stokes2 series span in periods

  // [outputs]
  std::string out_dir;  // defaults to the scenario name
  bool want_crest = true;
  bool want_ledger = true;
  bool want_classify = true;
  std::vector<std::string> verify;  // taf | bound2d | residuals | oracle
};

namespace detail {

using SectionMap = std::map<std::string, std::map<std::string, std::string>>;

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// key = value lines with [section] headers and # comments.
inline SectionMap parse_kv_text(std::istream& in) {
  SectionMap m;
  std::string section;  // "" = top level
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw config_error("line " + std::to_string(lineno) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw config_error("line " + std::to_string(lineno) + ": empty key");
    if (!m[section].emplace(key, value).second)
      throw config_error("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
  }
  return m;
}

inline SectionMap sections_from_json(const nlohmann::json& j) {
  SectionMap m;
  auto store = [&](const std::string& sec, const std::string& key,
                   const nlohmann::json& v) {
    if (v.is_string())
      m[sec][key] = v.get<std::string>();
    else if (v.is_boolean())
      m[sec][key] = v.get<bool>() ? "true" : "false";
    else
      m[sec][key] = v.dump();
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      for (const auto& [k2, v2] : value.items()) store(key, k2, v2);
    } else {
      store("", key, value);
    }
  }
  return m;
}

class FieldReader {
 public:
  explicit FieldReader(const SectionMap& m) : m_(m) {}

  std::optional<std::string> raw(const std::string& sec, const std::string& key) const {
    auto s = m_.find(sec);
    if (s == m_.end()) return std::nullopt;
    auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    used_.insert(sec + "." + key);
    return k->second;
  }

  std::string get_string(const std::string& sec, const std::string& key,
                         const std::string& fallback) const {
    return raw(sec, key).value_or(fallback);
  }

  double get_double(const std::string& sec, const std::string& key, double fallback,
                    std::vector<std::string>& errors) const {
    const auto v = raw(sec, key);
    if (!v) return fallback;
    try {
      std::size_t pos = 0;
      const double x = std::stod(*v, &pos);
      if (pos != v->size()) throw std::invalid_argument("");
      return x;
    } catch (...) {
      errors.push_back(qualify(sec, key) + ": not a number ('" + *v + "')");
      return fallback;
    }
  }

  int get_int(const std::string& sec, const std::string& key, int fallback,
              std::vector<std::string>& errors) const {
    const auto v = raw(sec, key);
    if (!v) return fallback;
    try {
      std::size_t pos = 0;
      const int x = std::stoi(*v, &pos);
      if (pos != v->size()) throw std::invalid_argument("");
      return x;
    } catch (...) {
      errors.push_back(qualify(sec, key) + ": not an integer ('" + *v + "')");
      return fallback;
    }
  }

  bool get_bool(const std::string& sec, const std::string& key, bool fallback,
                std::vector<std::string>& errors) const {
    const auto v = raw(sec, key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1") return true;
    if (*v == "false" || *v == "0") return false;
    errors.push_back(qualify(sec, key) + ": expected true/false ('" + *v + "')");
    return fallback;
  }

  static std::string qualify(const std::string& sec, const std::string& key) {
    return sec.empty() ? key : sec + "." + key;
  }

  /// Keys present in the input but never read: configuration typos.
  std::vector<std::string> unknown_keys() const {
    std::vector<std::string> unknown;
    for (const auto& [sec, kv] : m_)
      for (const auto& [key, value] : kv) {
        const std::string q = sec + "." + key;
        if (!used_.count(q)) unknown.push_back(qualify(sec, key));
      }
    return unknown;
  }

 private:
  const SectionMap& m_;
  mutable std::set<std::string> used_;
};

/// "s,1,0,1.0; c,2,1,0.5" -> mode list (kind, k0 [, k1], amplitude).
inline std::vector<ModeSpec> parse_modes(const std::string& text,
                                         std::vector<std::string>& errors) {
  std::vector<ModeSpec> out;
  std::istringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    group = trim(group);
    if (group.empty()) continue;
    std::istringstream fields(group);
    std::string tok;
    std::vector<std::string> f;
    while (std::getline(fields, tok, ',')) f.push_back(trim(tok));
    try {
      ModeSpec m;
      if (f.size() == 3) {
        m.kind = f[0].at(0);
        m.k0 = std::stoi(f[1]);
        m.amplitude = std::stod(f[2]);
      } else if (f.size() == 4) {
        m.kind = f[0].at(0);
        m.k0 = std::stoi(f[1]);
        m.k1 = std::stoi(f[2]);
        m.amplitude = std::stod(f[3]);
      } else if (f.size() == 5) {
        m.kind = f[0].at(0);
        m.k0 = std::stoi(f[1]);
        m.k1 = std::stoi(f[2]);
        m.k2 = std::stoi(f[3]);
        m.amplitude = std::stod(f[4]);
      } else {
        throw std::invalid_argument("");
      }
      if (m.kind != 's' && m.kind != 'c') throw std::invalid_argument("");
      out.push_back(m);
    } catch (...) {
      errors.push_back("initial.modes: malformed group '" + group +
                       "' (expected kind,k0[,k1[,k2]],amplitude)");
    }
  }
  return out;
}

}  // namespace detail

/// Builds and validates a Scenario from parsed sections, accumulating
/// field-level error messages into a single configuration error.
inline Scenario scenario_from_sections(const detail::SectionMap& sections) {
  std::vector<std::string> errors;
  detail::FieldReader r(sections);
  Scenario s;

  s.name = r.get_string("", "name", "run");
  const std::string eq = r.get_string("", "equation", "");
  if (eq.empty()) {
    errors.push_back("equation: required");
  } else {
    try {
      s.equation = equation_from_string(eq);
    } catch (const config_error& e) {
      errors.push_back(e.what());
    }
  }

  s.d = r.get_int("domain", "d", s.equation == Equation::nse2d ? 2 : 1, errors);
  s.L = r.get_double("domain", "L", 2 * pi, errors);
  s.N = r.get_int("domain", "N", 64, errors);

  s.nu = r.get_double("physics", "nu", 0.1, errors);
  s.nu = r.get_double("physics", "kappa", s.nu, errors);
  s.nu = r.get_double("physics", "eps", s.nu, errors);
  s.nu = r.get_double("physics", "k", s.nu, errors);
  s.U0 = r.get_double("physics", "U0", 1.0, errors);
  s.Omega0 = r.get_double("physics", "Omega0", 1.0, errors);
  s.U = r.get_double("physics", "U", 1.0, errors);

  s.preset = r.get_string("initial", "preset", "modes");
  const std::string modes = r.get_string("initial", "modes", "");
  if (!modes.empty()) s.modes = detail::parse_modes(modes, errors);
  s.kmax = r.get_int("initial", "kmax", 4, errors);
  s.seed = static_cast<std::uint64_t>(r.get_int("initial", "seed", 1, errors));
  s.amplitude = r.get_double("initial", "amplitude", 1.0, errors);

  s.forcing_type = r.get_string("forcing", "type", "none");
  s.forcing_k0 = r.get_int("forcing", "k0", 4, errors);
  s.forcing_amplitude = r.get_double("forcing", "amplitude", 1.0, errors);
  const std::string fmodes = r.get_string("forcing", "modes", "");
  if (!fmodes.empty()) {
    auto parsed = detail::parse_modes(fmodes, errors);
    s.forcing_modes = parsed;
    for (const auto& m : parsed)
      if (m.kind == 'c' && m.k0 == 0 && m.k1 == 0)
        errors.push_back("forcing.modes: zero-mean violation (constant cosine mode)");
  }

  s.T = r.get_double("time", "T", 1.0, errors);
  s.dt = r.get_double("time", "dt", 0.0, errors);
  s.sample_every = r.get_int("time", "sample_every", 1, errors);
  s.samples = r.get_int("time", "samples", 2048, errors);
  s.t_min = r.get_double("time", "t_min", 1.0, errors);
  s.t_max = r.get_double("time", "t_max", 1e4, errors);
  s.log_spaced = r.get_bool("time", "log_spaced", false, errors);
  s.periods = r.get_double("time", "periods", 8.0, errors);

  s.out_dir = r.get_string("outputs", "dir", s.name);
  s.want_crest = r.get_bool("outputs", "crest", true, errors);
  s.want_ledger = r.get_bool("outputs", "ledger", true, errors);
  s.want_classify = r.get_bool("outputs", "classify", true, errors);
  {
    std::istringstream vs(r.get_string("outputs", "verify", ""));
    std::string tok;
    while (std::getline(vs, tok, ',')) {
      tok = detail::trim(tok);
      if (tok.empty()) continue;
      if (tok != "taf" && tok != "bound2d" && tok != "residuals" && tok != "oracle" &&
          tok != "kolmogorov")
        errors.push_back("outputs.verify: unknown check '" + tok + "'");
      else
        s.verify.push_back(tok);
    }
  }

  for (const auto& k : r.unknown_keys()) errors.push_back("unknown key: " + k);

  // structural validation
  if (s.N < 4 || s.N % 2 != 0) errors.push_back("domain.N: must be even and >= 4");
  if (!(s.L > 0.0)) errors.push_back("domain.L: must be positive");
  if (s.d < 1 || s.d > 3) errors.push_back("domain.d: must be 1, 2 or 3");
  if (!(s.nu > 0.0)) errors.push_back("physics: diffusivity must be positive");
  if (s.equation == Equation::nse2d && s.d != 2)
    errors.push_back("domain.d: nse2d requires d = 2");
  if ((s.equation == Equation::heat || s.equation == Equation::burgers) && s.d != 1)
    errors.push_back("domain.d: heat/burgers scenarios are one-dimensional");
  if (s.equation == Equation::oracle_stokes2 && (!(s.U0 > 0.0) || !(s.Omega0 > 0.0)))
    errors.push_back("physics: stokes2 requires positive U0 and Omega0");
  if (s.equation == Equation::oracle_halfplane) {
    if (!(s.U > 0.0)) errors.push_back("physics.U: must be positive");
    if (!(s.t_min > 0.0) || !(s.t_max > s.t_min))
      errors.push_back("time: halfplane needs 0 < t_min < t_max");
  }
  if (!(s.T > 0.0) && (s.equation == Equation::heat || s.equation == Equation::burgers ||
                       s.equation == Equation::nse2d || s.equation == Equation::oracle_burgers))
    errors.push_back("time.T: must be positive");
  if (s.sample_every < 1) errors.push_back("time.sample_every: must be >= 1");
  if (s.samples < 2) errors.push_back("time.samples: must be >= 2");
  if (s.preset != "modes" && s.preset != "taylor_green" && s.preset != "random_band" &&
      s.preset != "zero")
    errors.push_back("initial.preset: unknown preset '" + s.preset + "'");
  if (s.preset == "modes" && s.modes.empty() &&
      (s.equation == Equation::heat || s.equation == Equation::burgers ||
       s.equation == Equation::nse2d || s.equation == Equation::oracle_burgers))
    errors.push_back("initial.modes: required for preset 'modes'");
  if (s.forcing_type != "none" && s.forcing_type != "single_mode_x" &&
      s.forcing_type != "modes")
    errors.push_back("forcing.type: unknown type '" + s.forcing_type + "'");
  if (s.forcing_type == "modes" && s.forcing_modes.empty())
    errors.push_back("forcing.modes: required for type 'modes'");
  if (s.forcing_type != "none" && s.equation != Equation::nse2d)
    errors.push_back("forcing: only nse2d scenarios accept forcing");
  if (s.forcing_type == "single_mode_x") {
    if (s.forcing_k0 < 1 || s.forcing_k0 > s.N / 3)
      errors.push_back("forcing.k0: must lie in [1, N/3] (band-limited spectrum cut-off)");
    if (!(s.forcing_amplitude > 0.0))
      errors.push_back("forcing.amplitude: must be positive");
  }
  const bool wants_taf =
      std::find(s.verify.begin(), s.verify.end(), "taf") != s.verify.end();
  const bool wants_bound2d =
      std::find(s.verify.begin(), s.verify.end(), "bound2d") != s.verify.end();
  if ((wants_taf || wants_bound2d) && s.forcing_type == "none")
    errors.push_back("outputs.verify: taf/bound2d checks require forcing");
  if ((wants_taf || wants_bound2d) && s.forcing_type == "single_mode_x") {
    // provisos tau^2 Phi_0 > 1 and tau^2 Phi_1 > 1; Phi_n of A sin(k0 y) on
    // [0,L]^2 is A^2 L^2 / 2 * (2 pi k0/L)^{2n}
    const double tau = s.L * s.L / s.nu;
    const double phi0 = 0.5 * s.forcing_amplitude * s.forcing_amplitude * s.L * s.L;
    const double phi1 = phi0 * std::pow(2 * pi * s.forcing_k0 / s.L, 2);
    if (!(tau * tau * phi0 > 1.0))
      errors.push_back("outputs.verify: proviso tau^2 Phi_0 > 1 fails (tau^2 Phi_0 = " +
                       std::to_string(tau * tau * phi0) + ")");
    if (!(tau * tau * phi1 > 1.0))
      errors.push_back("outputs.verify: proviso tau^2 Phi_1 > 1 fails (tau^2 Phi_1 = " +
                       std::to_string(tau * tau * phi1) + ")");
  }

  if (!errors.empty()) {
    std::string msg = "invalid scenario:";
    for (const auto& e : errors) msg += "\n  - " + e;
    throw config_error(msg);
  }
  return s;
}

/// Loads a scenario from key/value text (default) or JSON (.json extension).
inline Scenario parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open scenario file: " + path.string());
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw config_error("JSON parse error in " + path.string() + ": " + e.what());
    }
    return scenario_from_sections(detail::sections_from_json(j));
  }
  return scenario_from_sections(detail::parse_kv_text(in));
}

inline Scenario parse_config_text(const std::string& text) {
  std::istringstream in(text);
  return scenario_from_sections(detail::parse_kv_text(in));
}

}  // namespace crestlab
