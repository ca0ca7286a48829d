#pragma once

#include <cmath>
#include <complex>

#include "crestlab/field.hpp"

namespace crestlab {

/// ||phi||_2^2 = L^d sum_k |phi_k|^2 (Parseval), components summed.
inline double l2_norm_sq(const SpectralField& f) {
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c)
    for (const auto& v : f[c]) s += std::norm(v);
  return std::pow(f.grid.L, f.grid.d) * s;
}

inline double l2_norm(const SpectralField& f) { return std::sqrt(l2_norm_sq(f)); }

/// Grid maximum of |phi| per component; vector fields take the max over
/// components. Underestimates the true supremum by O(N^-2) for smooth fields.
inline double sup_norm(const SpectralField& f) {
  const RealField r = to_physical(f);
  double m = 0.0;
  for (const auto& c : r.comp)
    for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

inline double sup_norm(const RealField& r) {
  double m = 0.0;
  for (const auto& c : r.comp)
    for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

/// p in {2, inf}; see the type-specific overloads above.
inline double norm(const SpectralField& f, double p) {
  if (p == 2.0) return l2_norm(f);
  if (std::isinf(p)) return sup_norm(f);
  throw domain_error("norm: only p = 2 and p = inf are supported");
}

/// ||D^n phi||_2^2 = L^d (2 pi / L)^{2|n|} sum_k (prod_i k_i^{2 n_i}) |phi_k|^2.
inline double sobolev_seminorm_sq(const SpectralField& f, const MultiIndex& n) {
  const PeriodicGrid& g = f.grid;
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const auto& a = f[c];
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
      const double an = std::norm(a[idx]);
      if (an == 0.0) return;
      double w = 1.0;
      const int ks[3] = {k0, k1, k2};
      for (int axis = 0; axis < g.d; ++axis)
        for (int rep = 0; rep < 2 * n[axis]; ++rep) w *= ks[axis];
      s += w * an;
    });
  }
  return std::pow(g.L, g.d) * std::pow(g.k_unit(), 2 * n.order()) * s;
}

/// ||phi||_{H^s}^2 = L^d (2 pi / L)^{2s} sum_k |k|^{2s} |phi_k|^2.
/// For s < 0 the k = 0 term is excluded and the field must have zero mean.
inline double hs_norm_sq(const SpectralField& f, double s) {
  const PeriodicGrid& g = f.grid;
  if (s < 0.0) {
    for (int c = 0; c < f.components(); ++c)
      if (std::abs(f.mean(c)) > 1e-12)
        throw domain_error("hs_norm_sq: s < 0 requires a mean-zero field");
  }
  double acc = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const auto& a = f[c];
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
      const double an = std::norm(a[idx]);
      if (an == 0.0) return;
      const double k2n = double(k0) * k0 + double(k1) * k1 + double(k2) * k2;
      if (k2n == 0.0) {
        if (s == 0.0) acc += an;  // |k|^0 = 1; s > 0 kills the term, s < 0 excluded
        return;
      }
      acc += std::pow(k2n, s) * an;
    });
  }
  return std::pow(g.L, g.d) * std::pow(g.k_unit(), 2.0 * s) * acc;
}

/// Coefficients multiplied by prod_i (i 2 pi k_i / L)^{n_i}. The Nyquist mode
/// is zeroed along axes with odd derivative order to preserve realness.
inline SpectralField spectral_derivative(const SpectralField& f, const MultiIndex& n) {
  const PeriodicGrid& g = f.grid;
  SpectralField out(g, f.components());
  const double ku = g.k_unit();
  for (int c = 0; c < f.components(); ++c) {
    const auto& a = f[c];
    auto& b = out[c];
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
      if (a[idx] == cdouble{0.0, 0.0}) return;
      const int ks[3] = {k0, k1, k2};
      cdouble w{1.0, 0.0};
      for (int axis = 0; axis < g.d; ++axis) {
        const int ord = n[axis];
        if (ord == 0) continue;
        if (ks[axis] == g.N / 2 && ord % 2 == 1) {
          w = 0.0;
          break;
        }
        const cdouble ik{0.0, ku * ks[axis]};
        for (int rep = 0; rep < ord; ++rep) w *= ik;
      }
      b[idx] = w * a[idx];
    });
  }
  return out;
}

/// 2/3-rule truncation: zeroes every coefficient with any |k_i| > N/3.
inline void dealias_in_place(SpectralField& f) {
  const PeriodicGrid& g = f.grid;
  const int kmax = g.N / 3;
  for (int c = 0; c < f.components(); ++c) {
    auto& a = f[c];
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
      if (std::abs(k0) > kmax || std::abs(k1) > kmax || std::abs(k2) > kmax)
        a[idx] = cdouble{0.0, 0.0};
    });
  }
}

inline SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  dealias_in_place(out);
  return out;
}

/// Largest |k_i| over modes above `tol` in magnitude (band-limit probe).
inline int max_active_mode(const SpectralField& f, double tol = 0.0) {
  int m = 0;
  for (int c = 0; c < f.components(); ++c) {
    const auto& a = f[c];
    for_each_mode(f.grid, [&](std::size_t idx, int k0, int k1, int k2) {
      if (std::abs(a[idx]) > tol)
        m = std::max({m, std::abs(k0), std::abs(k1), std::abs(k2)});
    });
  }
  return m;
}

}  // namespace crestlab
