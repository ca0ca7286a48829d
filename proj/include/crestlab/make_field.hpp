#pragma once

#include <functional>
#include <random>

#include "crestlab/ops.hpp"

namespace crestlab {

/// Adds amplitude * cos(k_unit * k.x + phase) to component c.
inline void add_cos_mode(SpectralField& f, int c, int k0, int k1, int k2,
                         double amplitude, double phase = 0.0) {
  const cdouble half = 0.5 * amplitude * std::exp(cdouble{0.0, phase});
  f.at(c, k0, k1, k2) += half;
  f.at(c, -k0, -k1, -k2) += std::conj(half);
}

inline void add_sin_mode(SpectralField& f, int c, int k0, int k1, int k2,
                         double amplitude) {
  add_cos_mode(f, c, k0, k1, k2, amplitude, -pi / 2.0);
}

/// Samples fn at the grid nodes of component c and transforms. fn receives
/// (x, y, z); unused coordinates are 0.
inline SpectralField field_from_function(
    const PeriodicGrid& g, int ncomp,
    const std::function<double(int comp, double, double, double)>& fn) {
  RealField r;
  r.grid = g;
  r.comp.assign(ncomp, std::vector<double>(g.points()));
  const double h = g.dx();
  for (int c = 0; c < ncomp; ++c) {
    std::size_t idx = 0;
    if (g.d == 1) {
      for (int i = 0; i < g.N; ++i) r.comp[c][idx++] = fn(c, i * h, 0.0, 0.0);
    } else if (g.d == 2) {
      for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j) r.comp[c][idx++] = fn(c, i * h, j * h, 0.0);
    } else {
      for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j)
          for (int l = 0; l < g.N; ++l) r.comp[c][idx++] = fn(c, i * h, j * h, l * h);
    }
  }
  return to_spectral(r);
}

/// The Taylor-Green velocity pair (sin x cos y, -cos x sin y) on [0,L]^2.
inline SpectralField taylor_green_velocity(const PeriodicGrid& g) {
  if (g.d != 2) throw config_error("taylor_green_velocity: d must be 2");
  SpectralField u(g, 2);
  // sin x cos y = 1/2 [sin(x+y) + sin(x-y)]
  add_sin_mode(u, 0, 1, 1, 0, 0.5);
  add_sin_mode(u, 0, 1, -1, 0, 0.5);
  add_sin_mode(u, 1, 1, 1, 0, -0.5);
  add_sin_mode(u, 1, 1, -1, 0, 0.5);  // -cos x sin y = -1/2[sin(x+y) - sin(x-y)]
  return u;
}

namespace detail {
inline bool canonical_half_space(int k0, int k1, int k2) {
  if (k0 != 0) return k0 > 0;
  if (k1 != 0) return k1 > 0;
  return k2 > 0;
}
}  // namespace detail

/// Mean-zero random field with independent Gaussian coefficients on modes
/// with 0 < max_i |k_i| <= kmax, conjugate symmetry imposed. `decay` damps
/// amplitudes as |k|^-decay (0 = flat spectrum).
inline SpectralField random_band_limited(const PeriodicGrid& g, int ncomp, int kmax,
                                         std::mt19937_64& rng, double decay = 0.0) {
  if (kmax < 1 || kmax > g.N / 2 - 1)
    throw config_error("random_band_limited: kmax out of range");
  SpectralField f(g, ncomp);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int c = 0; c < ncomp; ++c) {
    auto& a = f[c];
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
      if (std::abs(k0) > kmax || std::abs(k1) > kmax || std::abs(k2) > kmax) return;
      if (k0 == 0 && k1 == 0 && k2 == 0) return;
      if (!detail::canonical_half_space(k0, k1, k2)) return;
      const double kk = std::sqrt(double(k0) * k0 + double(k1) * k1 + double(k2) * k2);
      const double amp = decay > 0.0 ? std::pow(kk, -decay) : 1.0;
      const cdouble z{amp * gauss(rng), amp * gauss(rng)};
      a[idx] = z;
      a[f.mode_index(-k0, -k1, -k2)] = std::conj(z);
    });
  }
  return f;
}

/// Projects a vector field onto its divergence-free part (Leray projection).
inline void project_divergence_free(SpectralField& u) {
  const PeriodicGrid& g = u.grid;
  if (u.components() != g.d) throw config_error("projection needs a d-component field");
  for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
    const double ks[3] = {double(k0), double(k1), double(k2)};
    const double kk = ks[0] * ks[0] + ks[1] * ks[1] + ks[2] * ks[2];
    if (kk == 0.0) return;
    cdouble dot{0.0, 0.0};
    for (int c = 0; c < g.d; ++c) dot += ks[c] * u[c][idx];
    for (int c = 0; c < g.d; ++c) u[c][idx] -= ks[c] * dot / kk;
  });
}

}  // namespace crestlab
