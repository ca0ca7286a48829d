#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "crestlab/fft.hpp"
#include "crestlab/grid.hpp"

namespace crestlab {

using cdouble = std::complex<double>;

/// Real-valued samples of a (possibly vector) field on the collocation grid.
struct RealField {
  PeriodicGrid grid;
  std::vector<std::vector<double>> comp;  // one sample array per component

  int components() const { return static_cast<int>(comp.size()); }
};

/// Periodic field held as complex Fourier coefficients phi_k, one coefficient
/// array per component, wrap-around frequency order along every axis.
/// Real-valued fields satisfy conj(phi_k) = phi_{-k}.
struct SpectralField {
  PeriodicGrid grid;
  std::vector<std::vector<cdouble>> comp;

  SpectralField() = default;
  SpectralField(const PeriodicGrid& g, int ncomp) : grid(g) {
    if (ncomp < 1 || (ncomp != 1 && ncomp != g.d))
      throw config_error("field: components must be 1 (scalar) or d (vector)");
    comp.assign(ncomp, std::vector<cdouble>(g.points(), cdouble{0.0, 0.0}));
  }

  int components() const { return static_cast<int>(comp.size()); }

  std::vector<cdouble>& operator[](int c) { return comp[c]; }
  const std::vector<cdouble>& operator[](int c) const { return comp[c]; }

  /// Coefficient of integer mode (k0,k1,k2) in component c.
  cdouble& at(int c, int k0, int k1 = 0, int k2 = 0) {
    return comp[c][mode_index(k0, k1, k2)];
  }
  cdouble at(int c, int k0, int k1 = 0, int k2 = 0) const {
    return comp[c][mode_index(k0, k1, k2)];
  }

  std::size_t mode_index(int k0, int k1 = 0, int k2 = 0) const {
    auto wrap = [this](int k) {
      if (k < -grid.N / 2 || k > grid.N / 2) throw domain_error("mode outside grid range");
      return k >= 0 ? k : k + grid.N;
    };
    return flat_index(grid, wrap(k0), grid.d > 1 ? wrap(k1) : 0, grid.d > 2 ? wrap(k2) : 0);
  }

  /// Mean value over the box = coefficient of k=0.
  cdouble mean(int c = 0) const { return comp[c][0]; }

  SpectralField& operator+=(const SpectralField& o) {
    for (int c = 0; c < components(); ++c)
      for (std::size_t i = 0; i < comp[c].size(); ++i) comp[c][i] += o.comp[c][i];
    return *this;
  }
  SpectralField& operator*=(double s) {
    for (auto& cc : comp)
      for (auto& v : cc) v *= s;
    return *this;
  }
};

inline void check_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid == b.grid) || a.components() != b.components())
    throw config_error("field: grid or component mismatch");
}

/// Inverse transform to physical samples. Throws if the imaginary residue
/// exceeds `imag_tol` (broken conjugate symmetry), unless imag_tol < 0.
inline RealField to_physical(const SpectralField& f, double imag_tol = 1e-9) {
  RealField out;
  out.grid = f.grid;
  out.comp.resize(f.components());
  std::vector<cdouble> buf(f.grid.points());
  for (int c = 0; c < f.components(); ++c) {
    fft::synthesis(f.grid, f[c].data(), buf.data());
    out.comp[c].resize(buf.size());
    double max_im = 0.0;
    for (std::size_t i = 0; i < buf.size(); ++i) {
      out.comp[c][i] = buf[i].real();
      max_im = std::max(max_im, std::abs(buf[i].imag()));
    }
    if (imag_tol >= 0.0 && max_im > imag_tol)
      throw config_error("to_physical: field is not real (|Im| = " + std::to_string(max_im) + ")");
  }
  return out;
}

/// Forward transform of real samples.
inline SpectralField to_spectral(const RealField& r) {
  SpectralField out(r.grid, r.components());
  std::vector<cdouble> buf(r.grid.points());
  for (int c = 0; c < r.components(); ++c) {
    if (r.comp[c].size() != r.grid.points())
      throw config_error("to_spectral: sample count does not match grid");
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = cdouble{r.comp[c][i], 0.0};
    fft::analysis(r.grid, buf.data(), out[c].data());
  }
  return out;
}

/// Largest |Im| among the physical samples of f; conjugate-symmetry probe.
inline double max_imag_residue(const SpectralField& f) {
  std::vector<cdouble> buf(f.grid.points());
  double max_im = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    fft::synthesis(f.grid, f[c].data(), buf.data());
    for (const auto& v : buf) max_im = std::max(max_im, std::abs(v.imag()));
  }
  return max_im;
}

/// Overwrites phi_k with (phi_k + conj(phi_{-k}))/2, making the field exactly real.
inline void enforce_conjugate_symmetry(SpectralField& f) {
  const PeriodicGrid& g = f.grid;
  for (int c = 0; c < f.components(); ++c) {
    auto& a = f[c];
    for_each_mode(g, [&](std::size_t idx, int k0, int k1, int k2) {
      const std::size_t nidx = f.mode_index(k0 == g.N / 2 ? k0 : -k0,
                                            k1 == g.N / 2 ? k1 : -k1,
                                            k2 == g.N / 2 ? k2 : -k2);
      if (nidx < idx) return;
      const cdouble v = 0.5 * (a[idx] + std::conj(a[nidx]));
      a[idx] = v;
      a[nidx] = std::conj(v);
      if (nidx == idx) a[idx] = cdouble{v.real(), 0.0};
    });
  }
}

}  // namespace crestlab
