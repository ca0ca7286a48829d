#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "crestlab/errors.hpp"
#include "crestlab/grid.hpp"

namespace crestlab::oracles {

/// One standing wave of u_tt = k Laplacian(u) on [0,L]^d:
/// a * prod_i sin(m_i x_i) * cos(omega t + phase), omega = sqrt(k) |m| 2 pi / L.
struct WaveMode {
  std::array<int, 3> m{1, 0, 0};
  double a = 1.0;
  double phase = 0.0;
};

class WaveSolution {
 public:
  WaveSolution(int d, double L, double k, std::vector<WaveMode> modes)
      : d_(d), L_(L), k_(k), modes_(std::move(modes)) {
    if (d_ < 1 || d_ > 3) throw config_error("wave oracle: d must be 1..3");
    if (!(L_ > 0.0) || !(k_ > 0.0)) throw config_error("wave oracle: L, k must be positive");
    for (const auto& m : modes_)
      for (int i = 0; i < d_; ++i)
        if (m.m[i] < 1) throw config_error("wave oracle: mode indices must be >= 1");
  }

  double omega(const WaveMode& m) const {
    double mm = 0.0;
    for (int i = 0; i < d_; ++i) mm += double(m.m[i]) * m.m[i];
    return std::sqrt(k_ * mm) * 2 * pi / L_;
  }

  double operator()(const std::array<double, 3>& x, double t) const {
    double u = 0.0;
    for (const auto& m : modes_) {
      double s = m.a * std::cos(omega(m) * t + m.phase);
      for (int i = 0; i < d_; ++i) s *= std::sin(2 * pi * m.m[i] * x[i] / L_);
      u += s;
    }
    return u;
  }

  /// Exact L2 norm: distinct sine products are orthogonal with
  /// ||prod sin||_2^2 = (L/2)^d.
  double l2_norm(double t) const {
    double s = 0.0;
    for (const auto& m : modes_) {
      const double amp = m.a * std::cos(omega(m) * t + m.phase);
      s += amp * amp;
    }
    return std::sqrt(s * std::pow(L_ / 2.0, d_));
  }

  /// Dense scan; exact (=|amplitude|) for a single mode.
  double sup_norm(double t, int samples_per_axis = 0) const {
    if (modes_.size() == 1) {
      return std::abs(modes_[0].a * std::cos(omega(modes_[0]) * t + modes_[0].phase));
    }
    const int n = samples_per_axis > 0 ? samples_per_axis : (d_ == 1 ? 4096 : 256);
    double best = 0.0;
    std::array<double, 3> x{0.0, 0.0, 0.0};
    const int n1 = d_ > 1 ? n : 0, n2 = d_ > 2 ? n : 0;
    for (int i = 0; i <= n; ++i) {
      x[0] = L_ * i / n;
      for (int j = 0; j <= n1; ++j) {
        x[1] = n1 ? L_ * j / n : 0.0;
        for (int l = 0; l <= n2; ++l) {
          x[2] = n2 ? L_ * l / n : 0.0;
          best = std::max(best, std::abs((*this)(x, t)));
        }
      }
    }
    return best;
  }

  /// Bounded crest factor L^{d/2} sup / l2; constant in t for a single mode.
  double crest_factor(double t) const {
    return std::pow(L_, 0.5 * d_) * sup_norm(t) / l2_norm(t);
  }

  /// Common period when all mode frequencies are commensurate multiples of
  /// the fundamental; returns the single-mode period for one mode.
  double mode_period(std::size_t i) const { return 2 * pi / omega(modes_.at(i)); }

  int dimension() const { return d_; }
  double L() const { return L_; }

 private:
  int d_;
  double L_;
  double k_;
  std::vector<WaveMode> modes_;
};

}  // namespace crestlab::oracles
