#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "crestlab/ops.hpp"

namespace crestlab {

/// Calls fn(MultiIndex) for every multi-index of the given order in d dims.
template <typename Fn>
inline void for_each_multi_index(int d, int order, Fn&& fn) {
  MultiIndex m;
  if (d == 1) {
    m[0] = order;
    fn(m);
    return;
  }
  for (int n0 = 0; n0 <= order; ++n0) {
    m[0] = n0;
    if (d == 2) {
      m[1] = order - n0;
      fn(m);
    } else {
      for (int n1 = 0; n1 <= order - n0; ++n1) {
        m[1] = n1;
        m[2] = order - n0 - n1;
        fn(m);
      }
    }
  }
}

inline double multinomial(int order, const MultiIndex& m) {
  auto fact = [](int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  double denom = 1.0;
  for (int i = 0; i < 3; ++i) denom *= fact(m[i]);
  return fact(order) / denom;
}

/// J_n = sum_i sum_{|m|=n} multinomial(n;m) ||D^m u_i||_2^2. The multinomial
/// theorem collapses the sum to L^d (2 pi/L)^{2n} sum_k |k|^{2n} |u_k|^2,
/// which is what we evaluate; jn_by_multi_index keeps the literal route as
/// an independent cross-check.
inline double jn(const SpectralField& u, int n) {
  if (n < 0) throw domain_error("jn: order must be >= 0");
  const PeriodicGrid& g = u.grid;
  double s = 0.0;
  for (int c = 0; c < u.components(); ++c) {
    const auto& a = u[c];
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
      const double an = std::norm(a[idx]);
      if (an == 0.0) return;
      const double kk = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
      double w = 1.0;
      for (int rep = 0; rep < n; ++rep) w *= kk;
      s += w * an;
    });
  }
  return std::pow(g.L, g.d) * std::pow(g.k_unit(), 2 * n) * s;
}

/// Literal multi-index evaluation of J_n (slow; testing oracle).
inline double jn_by_multi_index(const SpectralField& u, int n) {
  if (n < 0) throw domain_error("jn: order must be >= 0");
  double s = 0.0;
  for_each_multi_index(u.grid.d, n, [&](const MultiIndex& m) {
    s += multinomial(n, m) * sobolev_seminorm_sq(u, m);
  });
  return s;
}

/// Time-independent, mean-zero forcing together with its seminorm ladder.
struct ForcingSpectrum {
  SpectralField f;
  std::vector<double> phi;  // phi[n] = Phi_n, n = 0..n_max
  double lambda_f = 0.0;    // smallest forcing length scale
  int attaining_n = -1;     // ladder position where the sup stabilized

  bool empty() const { return phi.empty() || phi[0] == 0.0; }
};

/// Phi_n: the J_n ladder applied to the forcing. Requires zero mean.
inline double phi_n(const SpectralField& f, int n) {
  for (int c = 0; c < f.components(); ++c)
    if (std::abs(f.mean(c)) > 1e-12)
      throw domain_error("phi_n: forcing must have zero mean");
  return jn(f, n);
}

/// F_n = J_n + tau^2 Phi_n.
inline double fn(double j_n, double phi_n_value, double tau) {
  if (j_n < 0.0 || phi_n_value < 0.0) throw domain_error("fn: inputs must be >= 0");
  return j_n + tau * tau * phi_n_value;
}

/// lambda_f^{-2} = sup_{n <= n_max} Phi_{n+1}/Phi_n. For band-limited forcing
/// the ratios increase towards (2 pi k_hi / L)^2 and stabilize; we return the
/// stabilized value and the position where the running sup was attained.
struct LambdaF {
  double lambda_f;
  int attained_at;
  std::vector<double> phi;  // the ladder actually computed, 0..n_max+1
};

inline LambdaF lambda_f(const SpectralField& f, int n_max = 8) {
  if (n_max < 1) throw config_error("lambda_f: n_max must be >= 1");
  LambdaF out;
  out.phi.resize(n_max + 2);
  for (int n = 0; n <= n_max + 1; ++n) {
    out.phi[n] = phi_n(f, n);
    if (n <= n_max && out.phi[n] <= 0.0)
      throw degenerate_forcing_error("lambda_f: Phi_" + std::to_string(n) + " vanishes");
  }
  double sup = 0.0;
  int at = 0;
  for (int n = 0; n <= n_max; ++n) {
    const double ratio = out.phi[n + 1] / out.phi[n];
    if (ratio > sup) {
      sup = ratio;
      at = n;
    }
  }
  out.lambda_f = 1.0 / std::sqrt(sup);
  out.attained_at = at;
  return out;
}

inline ForcingSpectrum make_forcing(const SpectralField& f, int n_max = 8) {
  ForcingSpectrum fs;
  fs.f = f;
  const LambdaF lf = lambda_f(f, n_max);
  fs.phi = lf.phi;
  fs.lambda_f = lf.lambda_f;
  fs.attaining_n = lf.attained_at;
  return fs;
}

/// tau = L^2/nu and lambda_0 with lambda_0^{-2} = lambda_f^{-2} + L^{-2}.
struct DerivedConstants {
  double nu;
  double L;
  double tau;
  double lambda_0;
};

inline DerivedConstants derived_constants(double nu, double L, double lambda_f_value) {
  if (!(nu > 0.0) || !(L > 0.0) || !(lambda_f_value > 0.0))
    throw domain_error("derived_constants: all inputs must be positive");
  DerivedConstants c;
  c.nu = nu;
  c.L = L;
  c.tau = L * L / nu;
  c.lambda_0 = 1.0 / std::sqrt(1.0 / (lambda_f_value * lambda_f_value) + 1.0 / (L * L));
  return c;
}

/// Finite-horizon limsup proxy: the maximum over the trailing `window`
/// fraction of sample times of the running mean (1/t_j) sum_{i<=j} phi_i dt.
/// Exact for convergent running means, conservative for oscillatory ones.
inline double long_time_average(const std::vector<double>& series, double window = 0.2) {
  if (series.empty()) throw domain_error("long_time_average: empty series");
  if (!(window > 0.0) || window > 1.0)
    throw config_error("long_time_average: window must be in (0,1]");
  const std::size_t n = series.size();
  const std::size_t start = n - std::max<std::size_t>(1, static_cast<std::size_t>(window * n));
  double acc = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    acc += series[j];
    if (j >= start) best = std::max(best, acc / double(j + 1));
  }
  return best;
}

/// One time sample of the seminorm ladder along a trajectory.
struct SeminormSample {
  double t = 0.0;
  std::vector<double> J;  // J[n]
  std::vector<double> F;  // F[n] = J[n] + tau^2 Phi[n]
};

/// Time-indexed ladder record along one trajectory (append-only).
struct NormLedger {
  std::vector<SeminormSample> samples;
  std::vector<double> phi;  // forcing ladder, time-independent
  double tau = 0.0;

  void append(double t, std::vector<double> J) {
    SeminormSample s;
    s.t = t;
    s.F.resize(J.size());
    for (std::size_t n = 0; n < J.size(); ++n) {
      const double p = n < phi.size() ? phi[n] : 0.0;
      s.F[n] = J[n] + tau * tau * p;
    }
    s.J = std::move(J);
    if (!samples.empty() && t <= samples.back().t)
      throw config_error("ledger: time stamps must increase");
    samples.push_back(std::move(s));
  }

  std::vector<double> series_J(int n) const {
    std::vector<double> v(samples.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = samples[i].J.at(n);
    return v;
  }
  std::vector<double> series_F(int n) const {
    std::vector<double> v(samples.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = samples[i].F.at(n);
    return v;
  }
  std::vector<double> series_t() const {
    std::vector<double> v(samples.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = samples[i].t;
    return v;
  }
};

}  // namespace crestlab
