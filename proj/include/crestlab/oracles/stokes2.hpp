#pragma once

#include <cmath>

#include "crestlab/errors.hpp"
#include "crestlab/grid.hpp"

namespace crestlab::oracles {

struct Stokes2Params {
  double U0 = 1.0;      // plate velocity amplitude
  double Omega0 = 1.0;  // plate frequency (rad/time)
  double nu = 1.0;      // kinematic viscosity
};

/// Stokes' second problem: fluid above a plate oscillating in its own plane,
///   w(x,t) = U0 Omega0 e^{-lambda x} cos(Omega0 t - lambda x),
///   lambda = sqrt(Omega0 / 2 nu).
/// The vorticity magnitude is |dw/dx|; its norms over x in [0,inf) admit
/// closed forms and the crest factor
///   C_f(t) = (2 Omega0/nu)^{1/4} sqrt(4 / (2 + cos 2 Omega0 t - sin 2 Omega0 t)),
/// period pi/Omega0, independent of U0.
class Stokes2 {
 public:
  explicit Stokes2(const Stokes2Params& p) : p_(p) {
    if (!(p.U0 > 0.0) || !(p.Omega0 > 0.0) || !(p.nu > 0.0))
      throw config_error("stokes2: parameters must be positive");
  }

  double lambda() const { return std::sqrt(p_.Omega0 / (2.0 * p_.nu)); }

  /// Vorticity amplitude from differentiating w: U0 Omega0 sqrt(Omega0/2nu).
  double amplitude() const { return p_.U0 * p_.Omega0 * lambda(); }

  /// Amplitude as printed in the reference derivation,
  /// sqrt(U0^2 Omega0^2 / 2 nu); differs from amplitude() by Omega0^{1/2}.
  double printed_amplitude() const {
    return std::sqrt(p_.U0 * p_.U0 * p_.Omega0 * p_.Omega0 / (2.0 * p_.nu));
  }

  double w(double x, double t) const {
    const double l = lambda();
    return p_.U0 * p_.Omega0 * std::exp(-l * x) * std::cos(p_.Omega0 * t - l * x);
  }

  /// Second component of curl u = (0, -dw/dx, 0).
  double vorticity(double x, double t) const {
    const double l = lambda();
    const double ph = p_.Omega0 * t - l * x;
    return amplitude() * std::exp(-l * x) * (std::cos(ph) - std::sin(ph));
  }

  /// Time-independent envelope sup_x |omega| <= amplitude * sqrt(2); the
  /// phase-aligned value used by the closed-form crest factor.
  double sup_vorticity_envelope() const { return amplitude() * std::sqrt(2.0); }

  /// Actual sup over x >= 0 at time t (dense scan in s = lambda x).
  double sup_vorticity_scan(double t, int samples = 200000) const {
    const double A = amplitude() * std::sqrt(2.0);
    const double th = p_.Omega0 * t + pi / 4.0;
    double best = 0.0;
    for (int i = 0; i <= samples; ++i) {
      const double s = 40.0 * i / samples;
      best = std::max(best, A * std::exp(-s) * std::abs(std::cos(th - s)));
    }
    return best;
  }

  /// Closed form ||omega||_2(t) = (A/2) sqrt((2 + cos 2w t - sin 2w t)/lambda).
  double l2_vorticity(double t) const {
    const double th = 2.0 * p_.Omega0 * t;
    return 0.5 * amplitude() *
           std::sqrt((2.0 + std::cos(th) - std::sin(th)) / lambda());
  }

  /// Semi-infinite quadrature of omega^2 in s = lambda x over 40 decay
  /// lengths, with the analytic mean-value tail beyond.
  double l2_vorticity_quadrature(double t, int intervals = 65536) const {
    const double A = amplitude();
    const double th0 = p_.Omega0 * t;
    const double S = 40.0;
    const double h = S / intervals;
    auto f = [&](double s) {
      const double c = std::cos(th0 - s) - std::sin(th0 - s);
      return std::exp(-2.0 * s) * c * c;
    };
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * f(i * h);
    }
    double integral = sum * h / 3.0;
    integral += 0.5 * std::exp(-2.0 * S);  // tail: <(cos - sin)^2> = 1
    return A * std::sqrt(integral / lambda());
  }

  /// C_f(t) per the closed form; unbounded variant (semi-infinite domain).
  double crest_factor(double t) const {
    const double th = 2.0 * p_.Omega0 * t;
    return std::pow(2.0 * p_.Omega0 / p_.nu, 0.25) *
           std::sqrt(4.0 / (2.0 + std::cos(th) - std::sin(th)));
  }

  /// Norm-ratio route: envelope sup over the closed-form L2 norm.
  double crest_factor_from_norms(double t) const {
    return sup_vorticity_envelope() / l2_vorticity(t);
  }

  double period() const { return pi / p_.Omega0; }

  const Stokes2Params& params() const { return p_; }

 private:
  Stokes2Params p_;
};

}  // namespace crestlab::oracles
