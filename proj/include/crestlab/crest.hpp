#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crestlab/ledger.hpp"
#include "crestlab/make_field.hpp"

namespace crestlab {

enum class CrestVariant { unbounded, bounded, forced };

inline const char* to_string(CrestVariant v) {
  switch (v) {
    case CrestVariant::unbounded: return "unbounded";
    case CrestVariant::bounded: return "bounded";
    default: return "forced";
  }
}

inline CrestVariant crest_variant_from_string(const std::string& s) {
  if (s == "unbounded") return CrestVariant::unbounded;
  if (s == "bounded") return CrestVariant::bounded;
  if (s == "forced") return CrestVariant::forced;
  throw config_error("unknown crest variant: " + s);
}

/// One crest-factor sample. `denom` keeps the normalizing norm so series can
/// be re-derived without the field.
struct CrestSample {
  double t = 0.0;
  CrestVariant variant = CrestVariant::bounded;
  double sup_norm = 0.0;
  double denom = 0.0;  // J_0^{1/2} or F_0^{1/2}
  double C_f = 0.0;
};

struct CrestSeries {
  std::vector<CrestSample> samples;

  std::vector<double> values() const {
    std::vector<double> v(samples.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = samples[i].C_f;
    return v;
  }
  std::vector<double> sup_norms() const {
    std::vector<double> v(samples.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = samples[i].sup_norm;
    return v;
  }
  std::vector<double> times() const {
    std::vector<double> v(samples.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = samples[i].t;
    return v;
  }
};

inline constexpr double kDenomFloor = 1e-30;

/// Crest factor from precomputed norms. unbounded: sup/J0^{1/2};
/// bounded: L^{d/2} sup/J0^{1/2}; forced: L^{d/2} sup/F0^{1/2}.
inline CrestSample crest_from_norms(double t, CrestVariant variant, double sup,
                                    double denom_sq, double L, int d) {
  if (!(denom_sq > kDenomFloor))
    throw degenerate_field_error("crest: denominator below floor");
  CrestSample s;
  s.t = t;
  s.variant = variant;
  s.sup_norm = sup;
  s.denom = std::sqrt(denom_sq);
  const double scale = variant == CrestVariant::unbounded ? 1.0 : std::pow(L, 0.5 * d);
  s.C_f = scale * sup / s.denom;
  return s;
}

/// Crest factor of a field; `f0` must carry F_0 for the forced variant.
inline CrestSample crest(const SpectralField& u, CrestVariant variant, double t = 0.0,
                         std::optional<double> f0 = std::nullopt) {
  const double denom_sq = variant == CrestVariant::forced
                              ? f0.value_or(-1.0)
                              : l2_norm_sq(u);
  if (variant == CrestVariant::forced && !f0)
    throw config_error("crest: forced variant requires F_0");
  return crest_from_norms(t, variant, sup_norm(u), denom_sq, u.grid.L, u.grid.d);
}

/// Gagliardo-Nirenberg constants c(n,d,L), keyed by (n,d); L and the grid
/// resolution used during calibration ride along for bookkeeping.
struct GniConstants {
  struct Entry {
    double c = 0.0;
    double L = 0.0;
    int N = 0;
    int kmax = 0;
    std::uint64_t seed = 0;
    int fields = 0;
  };
  std::map<std::pair<int, int>, Entry> table;  // (n,d) -> entry

  double at(int n, int d) const {
    auto it = table.find({n, d});
    if (it == table.end())
      throw config_error("gni: no calibrated constant for n=" + std::to_string(n) +
                         ", d=" + std::to_string(d));
    return it->second.c;
  }
};

/// Calibration/test ensemble: band limit and spectral decay vary per draw so
/// both near-single-mode and broadband fields are represented.
inline SpectralField random_gni_field(const PeriodicGrid& g, int kmax,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kband(1, kmax);
  std::uniform_int_distribution<int> dec(0, 3);
  static constexpr double decays[4] = {0.0, 0.5, 1.0, 2.0};
  return random_band_limited(g, 1, kband(rng), rng, decays[dec(rng)]);
}

/// Empirical calibration of c(n,d,L): 1.05 times the largest
/// C_f (J_0/J_n)^{d/4n} / L^{d/2} over `fields` random band-limited
/// mean-zero fields. Makes the sandwich falsifiable instead of vacuous.
inline GniConstants::Entry calibrate_gni(int n, int d, double L, int N,
                                         std::uint64_t seed = 20260808,
                                         int fields = 10000) {
  if (n <= d / 2) throw domain_error("gni: requires n > d/2");
  PeriodicGrid g(d, L, N);
  const int kmax = N / 3;
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int i = 0; i < fields; ++i) {
    const SpectralField u = random_gni_field(g, kmax, rng);
    const double j0 = jn(u, 0);
    const double jn_v = jn(u, n);
    const double cf = std::pow(L, 0.5 * d) * sup_norm(u) / std::sqrt(j0);
    const double ratio = cf * std::pow(j0 / jn_v, 0.25 * d / n) / std::pow(L, 0.5 * d);
    worst = std::max(worst, ratio);
  }
  GniConstants::Entry e;
  e.c = 1.05 * worst;
  e.L = L;
  e.N = N;
  e.kmax = kmax;
  e.seed = seed;
  e.fields = fields;
  return e;
}

/// The sandwich 1 <= C_f <= c(n,d,L) L^{d/2} (J_n/J_0)^{d/4n} for mean-zero
/// fields on the torus, n > d/2.
struct GniSandwich {
  double lower = 1.0;
  double upper = 0.0;
};

inline GniSandwich gni_sandwich(const SpectralField& u, int n, const GniConstants& c) {
  const int d = u.grid.d;
  if (n <= d / 2) throw domain_error("gni_sandwich: requires n > d/2");
  for (int comp = 0; comp < u.components(); ++comp)
    if (std::abs(u.mean(comp)) > 1e-12)
      throw domain_error("gni_sandwich: field must have zero mean");
  const double j0 = jn(u, 0);
  const double jn_v = jn(u, n);
  if (!(j0 > kDenomFloor)) throw degenerate_field_error("gni_sandwich: J_0 below floor");
  GniSandwich s;
  s.upper = c.at(n, d) * std::pow(u.grid.L, 0.5 * d) * std::pow(jn_v / j0, 0.25 * d / n);
  return s;
}

/// l = [c(n,d,L) (J_n/J_0)^{d/4n}]^{-2/d}; the solution length scale tied to
/// the crest factor through C_f <= (L/l)^{d/2}.
inline double length_scale_l(double j_n, double j0, int n, int d, double c) {
  if (!(j0 > kDenomFloor)) throw degenerate_field_error("length_scale_l: J_0 below floor");
  return std::pow(c * std::pow(j_n / j0, 0.25 * d / n), -2.0 / d);
}

/// l_{n,r}^{-2} = <(F_n/F_r)^{1/(n-r)}> via the long-time average.
inline double length_scale_lnr(const std::vector<double>& f_n_series,
                               const std::vector<double>& f_r_series, int n, int r,
                               double window = 0.2) {
  if (!(n > r && r >= 0)) throw domain_error("length_scale_lnr: need n > r >= 0");
  if (f_n_series.size() != f_r_series.size() || f_n_series.empty())
    throw domain_error("length_scale_lnr: mismatched or empty series");
  std::vector<double> ratio(f_n_series.size());
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    if (!(f_r_series[i] > kDenomFloor))
      throw degenerate_field_error("length_scale_lnr: F_r below floor");
    ratio[i] = std::pow(f_n_series[i] / f_r_series[i], 1.0 / (n - r));
  }
  const double inv_sq = long_time_average(ratio, window);
  return 1.0 / std::sqrt(inv_sq);
}

/// Average energy dissipation rate and Kolmogorov's dissipation length.
struct KolmogorovLength {
  double epsilon;
  double lambda_K;
};

inline KolmogorovLength kolmogorov_length(double nu, double mean_du_l2_sq, double L,
                                          double C_K = 1.0) {
  if (!(nu > 0.0) || !(mean_du_l2_sq > 0.0) || !(L > 0.0) || !(C_K > 0.0))
    throw domain_error("kolmogorov_length: inputs must be positive");
  KolmogorovLength k;
  k.epsilon = nu * mean_du_l2_sq / (L * L * L);
  k.lambda_K = C_K * std::pow(nu * nu * nu / k.epsilon, 0.25);
  return k;
}

}  // namespace crestlab
