#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <string>

#include "crestlab/errors.hpp"

namespace crestlab {

inline constexpr double pi = std::numbers::pi;

/// Uniform collocation grid on the periodic box [0,L]^d with N points per axis.
struct PeriodicGrid {
  int d = 1;       // spatial dimension, 1..3
  double L = 2 * pi;
  int N = 64;      // collocation points per axis, even, >= 4

  PeriodicGrid() = default;
  PeriodicGrid(int d_, double L_, int N_) : d(d_), L(L_), N(N_) { validate(); }

  void validate() const {
    if (d < 1 || d > 3) throw config_error("grid: d must be 1, 2 or 3");
    if (!(L > 0.0)) throw config_error("grid: L must be positive");
    if (N < 4 || N % 2 != 0) throw config_error("grid: N must be even and >= 4");
  }

  std::size_t points() const {
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(N);
    return n;
  }

  double dx() const { return L / N; }

  /// 2*pi/L, the wavenumber unit: mode k carries wavevector (2*pi/L)*k.
  double k_unit() const { return 2.0 * pi / L; }

  /// Integer frequency of storage index j along one axis (wrap-around order).
  int freq(int j) const { return j <= N / 2 ? j : j - N; }

  bool operator==(const PeriodicGrid&) const = default;
};

/// Multi-index for mixed partial derivatives; entries are non-negative.
struct MultiIndex {
  std::array<int, 3> n{0, 0, 0};

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> il) {
    int i = 0;
    for (int v : il) {
      if (v < 0) throw domain_error("multi-index entries must be >= 0");
      if (i < 3) n[i++] = v;
    }
  }

  int order() const { return n[0] + n[1] + n[2]; }
  int operator[](int i) const { return n[i]; }
  int& operator[](int i) { return n[i]; }
};

/// Row-major flat index for a d-dimensional N^d array.
inline std::size_t flat_index(const PeriodicGrid& g, int i0, int i1 = 0, int i2 = 0) {
  std::size_t idx = static_cast<std::size_t>(i0);
  if (g.d > 1) idx = idx * g.N + i1;
  if (g.d > 2) idx = idx * g.N + i2;
  return idx;
}

/// Calls fn(flat, k0, k1, k2) for every mode, with integer frequencies k_i.
template <typename Fn>
inline void for_each_mode(const PeriodicGrid& g, Fn&& fn) {
  const int N = g.N;
  if (g.d == 1) {
    for (int i = 0; i < N; ++i) fn(static_cast<std::size_t>(i), g.freq(i), 0, 0);
  } else if (g.d == 2) {
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i) {
      const int ki = g.freq(i);
      for (int j = 0; j < N; ++j, ++idx) fn(idx, ki, g.freq(j), 0);
    }
  } else {
    std::size_t idx = 0;
    for (int i = 0; i < N; ++i) {
      const int ki = g.freq(i);
      for (int j = 0; j < N; ++j) {
        const int kj = g.freq(j);
        for (int l = 0; l < N; ++l, ++idx) fn(idx, ki, kj, g.freq(l));
      }
    }
  }
}

}  // namespace crestlab
