#pragma once

#include <cmath>

#include "crestlab/errors.hpp"
#include "crestlab/grid.hpp"

namespace crestlab::oracles {

struct HalfPlaneParams {
  double U = 1.0;   // far-field horizontal speed
  double nu = 1.0;  // kinematic viscosity
};

/// Viscous flow on the upper half-plane started from (U, 0) with a no-slip
/// wall: u1 = U erf(x2 / 2 sqrt(nu t)), vorticity
///   omega = -(U / sqrt(pi nu t)) e^{-x2^2 / 4 nu t}.
/// Norms per unit length in x1:
///   ||omega||_inf = U / sqrt(pi nu t),  ||omega||_2 = U (2 pi)^{-1/4} (nu t)^{-1/4},
/// so the crest factor decays as (nu t)^{-1/4} and is independent of U.
class HalfPlane {
 public:
  explicit HalfPlane(const HalfPlaneParams& p) : p_(p) {
    if (!(p.U > 0.0) || !(p.nu > 0.0))
      throw config_error("halfplane: parameters must be positive");
  }

  double u1(double x2, double t) const {
    check_t(t);
    return p_.U * std::erf(x2 / (2.0 * std::sqrt(p_.nu * t)));
  }

  double vorticity(double x2, double t) const {
    check_t(t);
    return -(p_.U / std::sqrt(pi * p_.nu * t)) * std::exp(-x2 * x2 / (4.0 * p_.nu * t));
  }

  double sup_vorticity(double t) const {
    check_t(t);
    return p_.U / std::sqrt(pi * p_.nu * t);
  }

  double l2_vorticity(double t) const {
    check_t(t);
    return p_.U * std::pow(2.0 * pi, -0.25) * std::pow(p_.nu * t, -0.25);
  }

  /// Simpson quadrature of omega^2 over 40 Gaussian decay lengths.
  double l2_vorticity_quadrature(double t, int intervals = 65536) const {
    check_t(t);
    const double scale = std::sqrt(2.0 * p_.nu * t);  // omega^2 decays as e^{-x^2/scale^2}
    const double X = 40.0 * scale;
    const double h = X / intervals;
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double w = vorticity(i * h, t);
      const double sw = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += sw * w * w;
    }
    return std::sqrt(sum * h / 3.0);
  }

  /// Primary crest factor: the ratio of the norms above,
  /// (2/pi)^{1/4} (nu t)^{-1/4}.
  double crest_factor(double t) const { return sup_vorticity(t) / l2_vorticity(t); }

  /// Prefactor of the norm-ratio crest factor, (2/pi)^{1/4} ~ 0.8932.
  static double norm_ratio_prefactor() { return std::pow(2.0 / pi, 0.25); }

  /// Prefactor as printed in the reference derivation,
  /// (8/(pi e^2))^{1/4} ~ 0.7665; disagrees with the norm ratio above.
  static double printed_prefactor() {
    return std::pow(8.0 / (pi * std::exp(2.0)), 0.25);
  }

  const HalfPlaneParams& params() const { return p_; }

 private:
  static void check_t(double t) {
    if (!(t > 0.0)) throw domain_error("halfplane: t must be positive");
  }

  HalfPlaneParams p_;
};

}  // namespace crestlab::oracles
