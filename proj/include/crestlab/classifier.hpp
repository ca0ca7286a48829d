#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "crestlab/crest.hpp"

namespace crestlab::classifier {

/// Gottwald-Melbourne 0-1 test for chaos on a scalar series: ~0 for regular
/// dynamics, ~1 for chaotic. Median of the correlation statistic over random
/// phases c in (pi/5, 4 pi/5).
inline double zero_one_chaos_K(const std::vector<double>& series, int n_c = 100,
                               std::uint64_t seed = 20260808) {
  const std::size_t N = series.size();
  if (N < 64) throw domain_error("zero_one_chaos_K: series too short");
  const double mean = std::accumulate(series.begin(), series.end(), 0.0) / N;
  double var = 0.0;
  for (double v : series) var += (v - mean) * (v - mean);
  if (var / N < 1e-24) return 0.0;  // constant input: regular by definition

  const std::size_t n_cut = std::max<std::size_t>(8, N / 10);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> cdist(pi / 5.0, 4.0 * pi / 5.0);
  std::vector<double> Ks;
  Ks.reserve(n_c);
  std::vector<double> p(N + 1, 0.0), q(N + 1, 0.0), D(n_cut);
  for (int trial = 0; trial < n_c; ++trial) {
    const double c = cdist(rng);
    for (std::size_t j = 0; j < N; ++j) {
      p[j + 1] = p[j] + series[j] * std::cos((j + 1) * c);
      q[j + 1] = q[j] + series[j] * std::sin((j + 1) * c);
    }
    for (std::size_t n = 1; n <= n_cut; ++n) {
      double m = 0.0;
      const std::size_t count = N - n_cut;
      for (std::size_t j = 1; j <= count; ++j) {
        const double dp = p[j + n] - p[j];
        const double dq = q[j + n] - q[j];
        m += dp * dp + dq * dq;
      }
      m /= count;
      // modified mean-square displacement: remove the oscillatory term
      D[n - 1] = m - mean * mean * (1.0 - std::cos(n * c)) / (1.0 - std::cos(c));
    }
    // correlation of D(n) with n
    const double nbar = 0.5 * (1.0 + n_cut);
    double dbar = std::accumulate(D.begin(), D.end(), 0.0) / n_cut;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t n = 1; n <= n_cut; ++n) {
      const double dx = n - nbar;
      const double dy = D[n - 1] - dbar;
      sxy += dx * dy;
      sxx += dx * dx;
      syy += dy * dy;
    }
    Ks.push_back(syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0);
  }
  std::nth_element(Ks.begin(), Ks.begin() + Ks.size() / 2, Ks.end());
  const double K = Ks[Ks.size() / 2];
  return std::clamp(K, 0.0, 1.0);
}

struct CfStatistics {
  double mean = 0.0;
  double std_dev = 0.0;
  double cov = 0.0;              // std/mean
  double flatness = 1.0;         // normalized 4th moment, >= 1
  double burst_fraction = 0.0;   // samples above mean + 3 std
  double trend_slope = 0.0;      // log C_f vs log t
  double period_strength = 0.0;  // autocorrelation peak
  double dominant_period = 0.0;
  double chaos_K = 0.0;
  bool sup_tail_vanishes = false;  // companion field amplitude dies off
  std::size_t samples_used = 0;
};

namespace detail {

inline std::vector<double> detrend_linear(const std::vector<double>& v) {
  const std::size_t n = v.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += i;
    sy += v[i];
    sxx += double(i) * i;
    sxy += double(i) * v[i];
  }
  const double denom = n * sxx - sx * sx;
  const double b = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
  const double a = (sy - b * sx) / n;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i] - (a + b * i);
  return out;
}

/// Dominant autocorrelation peak at lag >= 2. The biased estimate decreases
/// with lag, so among equal-height peaks the fundamental wins; the reported
/// strength rescales by n/(n - lag) to undo that taper.
inline std::pair<double, double> autocorr_peak(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<double> d = detrend_linear(v);
  double var = 0.0;
  for (double x : d) var += x * x;
  if (var < 1e-24) return {0.0, 0.0};
  const std::size_t max_lag = n / 2;
  std::vector<double> r(max_lag + 1, 0.0);
  for (std::size_t lag = 2; lag <= max_lag; ++lag) {
    double s = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) s += d[i] * d[i + lag];
    r[lag] = s / var;
  }
  // the short-lag correlation of any smooth series is ~1; a dominant period
  // is only meaningful past the first zero crossing
  std::size_t first_zero = 0;
  for (std::size_t lag = 2; lag <= max_lag; ++lag)
    if (r[lag] <= 0.0) {
      first_zero = lag;
      break;
    }
  if (first_zero == 0 || first_zero + 1 > max_lag) return {0.0, 0.0};
  std::size_t best = first_zero;
  for (std::size_t lag = first_zero; lag <= max_lag; ++lag)
    if (r[lag] > r[best]) best = lag;
  double lag_refined = best;
  if (best > 2 && best < max_lag) {
    const double y0 = r[best - 1], y1 = r[best], y2 = r[best + 1];
    const double denom = y0 - 2 * y1 + y2;
    if (std::abs(denom) > 1e-30) lag_refined = best + 0.5 * (y0 - y2) / denom;
  }
  const double strength = r[best] * double(n) / (n - best);
  return {std::clamp(strength, 0.0, 1.0), lag_refined};
}

}  // namespace detail

/// Statistics of a crest-factor series. The first `trim` fraction of samples
/// is discarded as transient; at least 256 samples must remain.
inline CfStatistics cf_statistics(const CrestSeries& series, double trim = 0.2) {
  const std::size_t total = series.samples.size();
  const std::size_t start = static_cast<std::size_t>(trim * total);
  if (total < start + 256)
    throw domain_error("cf_statistics: need at least 256 samples after the transient trim");

  std::vector<double> cf, ts, sup;
  cf.reserve(total - start);
  for (std::size_t i = start; i < total; ++i) {
    cf.push_back(series.samples[i].C_f);
    ts.push_back(series.samples[i].t);
    sup.push_back(series.samples[i].sup_norm);
  }
  const std::size_t n = cf.size();

  CfStatistics s;
  s.samples_used = n;
  s.mean = std::accumulate(cf.begin(), cf.end(), 0.0) / n;
  double m2 = 0.0, m4 = 0.0;
  for (double v : cf) {
    const double d = v - s.mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  s.std_dev = std::sqrt(m2);
  s.cov = s.mean != 0.0 ? s.std_dev / std::abs(s.mean) : 0.0;
  s.flatness = m2 > 1e-24 ? m4 / (m2 * m2) : 1.0;

  const double burst_level = s.mean + 3.0 * s.std_dev;
  std::size_t bursts = 0;
  for (double v : cf)
    if (v > burst_level && s.std_dev > 0.0) ++bursts;
  s.burst_fraction = double(bursts) / n;

  // log-log trend (requires positive times; the transient trim usually
  // guarantees this for t-indexed series)
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(ts[i] > 0.0) || !(cf[i] > 0.0)) continue;
    const double x = std::log(ts[i]);
    const double y = std::log(cf[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m >= 16) {
    const double denom = m * sxx - sx * sx;
    s.trend_slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  }

  const auto [strength, lag] = detail::autocorr_peak(cf);
  s.period_strength = strength;
  if (n >= 2 && lag > 0.0) s.dominant_period = lag * (ts[1] - ts[0]);

  s.chaos_K = zero_one_chaos_K(detail::detrend_linear(cf));

  // companion amplitude decay: the field is dying if its sup norm trends
  // down in log-log and the trailing tenth sits clearly below the leading one
  const std::size_t tenth = std::max<std::size_t>(1, n / 10);
  double head = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < tenth; ++i) {
    head += sup[i];
    tail += sup[n - 1 - i];
  }
  double sup_slope = 0.0;
  {
    double px = 0.0, py = 0.0, pxx = 0.0, pxy = 0.0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(ts[i] > 0.0) || !(sup[i] > 0.0)) continue;
      const double x = std::log(ts[i]);
      const double y = std::log(sup[i]);
      px += x;
      py += y;
      pxx += x * x;
      pxy += x * y;
      ++cnt;
    }
    if (cnt >= 16) {
      const double denom = cnt * pxx - px * px;
      sup_slope = denom != 0.0 ? (cnt * pxy - px * py) / denom : 0.0;
    }
  }
  s.sup_tail_vanishes = sup_slope < -0.05 && tail < 0.8 * head;
  return s;
}

enum class Verdict {
  steady,
  decaying,
  periodic_or_quasiperiodic,
  mild_turbulence,
  stationary_hard_turbulence,
  intermittent_turbulence,
  indeterminate,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::steady: return "steady";
    case Verdict::decaying: return "decaying";
    case Verdict::periodic_or_quasiperiodic: return "periodic_or_quasiperiodic";
    case Verdict::mild_turbulence: return "mild_turbulence";
    case Verdict::stationary_hard_turbulence: return "stationary_hard_turbulence";
    case Verdict::intermittent_turbulence: return "intermittent_turbulence";
    default: return "indeterminate";
  }
}

struct Thresholds {
  double steady_cov = 1e-3;
  double decay_slope = -0.05;
  double period_min = 0.8;
  double k_regular = 0.2;
  double k_chaotic = 0.8;
  double c_star = 3.0;  // hard-turbulence crest level
  double f_star = 6.0;  // intermittency flatness level
  double b_star = 0.01; // burst-fraction level
};

struct ClassificationReport {
  Verdict verdict = Verdict::indeterminate;
  CfStatistics stats;
  Thresholds thresholds;
};

/// Decision table over the statistics; deterministic and total (falls back
/// to an explicit indeterminate verdict, never a guess).
inline ClassificationReport classify(const CfStatistics& s, const Thresholds& th = {}) {
  ClassificationReport rep;
  rep.stats = s;
  rep.thresholds = th;
  if (s.cov < th.steady_cov) {
    rep.verdict = Verdict::steady;
  } else if (s.trend_slope < th.decay_slope && s.sup_tail_vanishes) {
    rep.verdict = Verdict::decaying;
  } else if (s.period_strength > th.period_min && s.chaos_K < th.k_regular) {
    rep.verdict = Verdict::periodic_or_quasiperiodic;
  } else if (s.chaos_K >= th.k_chaotic && s.mean < th.c_star) {
    rep.verdict = Verdict::mild_turbulence;
  } else if (s.chaos_K >= th.k_chaotic && s.mean >= th.c_star) {
    rep.verdict = (s.flatness > th.f_star || s.burst_fraction > th.b_star)
                      ? Verdict::intermittent_turbulence
                      : Verdict::stationary_hard_turbulence;
  }
  return rep;
}

struct CoefficientBound {
  double B = 0.0;
  double delta = 0.0;
  double K_f = 0.0;        // sqrt(4 K0^2 pi B / delta)
  double K_f_tight = 0.0;  // sqrt(2 K0^2 pi B / delta): equality for uniform b
  double prefix_sum = 0.0; // mass carried by the sorted prefix N_1
  std::size_t prefix_count = 0;
};

/// The coefficient machinery bounding the crest factor of a decaying
/// eigenfunction superposition. Inputs: |a_n| for n = 0..N (the negative
/// indices mirror them), decay factors T_n(t) = e^{-lambda_n t}, and the
/// eigenfunction sup bound K0. delta is the maximal threshold whose
/// super-level modes still carry half the mass: sorted-prefix realization.
inline CoefficientBound coefficient_crest_bound(const std::vector<double>& a_abs,
                                        const std::vector<double>& lambda, double t,
                                        double K0) {
  if (a_abs.empty() || a_abs.size() != lambda.size())
    throw domain_error("coefficient_crest_bound: bad coefficient arrays");
  std::vector<double> b;  // over n in Z: n = 0 once, |n| >= 1 twice
  b.reserve(2 * a_abs.size());
  for (std::size_t n = 0; n < a_abs.size(); ++n) {
    if (a_abs[n] < 0.0) throw domain_error("coefficient_crest_bound: |a_n| must be >= 0");
    const double bn = a_abs[n] * std::exp(-lambda[n] * t);
    b.push_back(bn);
    if (n > 0) b.push_back(bn);
  }
  std::sort(b.begin(), b.end(), std::greater<double>());
  CoefficientBound r;
  for (double v : b) r.B += v;
  if (!(r.B > 0.0)) throw domain_error("coefficient_crest_bound: all coefficients vanish");
  for (double v : b) {
    r.prefix_sum += v;
    r.delta = v;
    ++r.prefix_count;
    if (r.prefix_sum >= 0.5 * r.B) break;
  }
  r.K_f = std::sqrt(4.0 * K0 * K0 * pi * r.B / r.delta);
  r.K_f_tight = std::sqrt(2.0 * K0 * K0 * pi * r.B / r.delta);
  return r;
}

/// Crest factor of u(x,t) = sum_n a_n T_n(t) e^{i n x} / sqrt(2 pi) over
/// [0, 2 pi] with a_{-n} = conj(a_n): dense-grid sup over the exact L2 norm.
/// The matching K0 for coefficient_crest_bound is 1/sqrt(2 pi). The basis
/// normalization cancels against the L^{1/2} factor of the crest factor, so
/// C_f = max_x |c_0 + sum 2 Re(c_n e^{inx})| / sqrt(sum_Z |c_n|^2).
inline double mode_superposition_crest(const std::vector<cdouble>& a,
                                    const std::vector<double>& lambda, double t,
                                    int grid = 8192) {
  if (a.empty() || a.size() != lambda.size())
    throw domain_error("mode_superposition_crest: bad coefficient arrays");
  if (std::abs(a[0].imag()) > 0.0)
    throw domain_error("mode_superposition_crest: a_0 must be real");
  double l2_sq = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const double bn = std::abs(a[n]) * std::exp(-lambda[n] * t);
    l2_sq += (n == 0 ? 1.0 : 2.0) * bn * bn;
  }
  if (!(l2_sq > 0.0)) throw domain_error("mode_superposition_crest: zero field");
  double sup = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double x = 2 * pi * i / grid;
    double v = a[0].real() * std::exp(-lambda[0] * t);
    for (std::size_t n = 1; n < a.size(); ++n) {
      const cdouble mode = a[n] * std::exp(cdouble{0.0, double(n) * x});
      v += 2.0 * mode.real() * std::exp(-lambda[n] * t);
    }
    sup = std::max(sup, std::abs(v));
  }
  return sup / std::sqrt(l2_sq);
}

}  // namespace crestlab::classifier
