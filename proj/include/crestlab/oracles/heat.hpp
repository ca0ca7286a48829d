#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "crestlab/errors.hpp"
#include "crestlab/grid.hpp"

namespace crestlab::oracles {

/// Eigenbasis for the separable heat solution.
enum class HeatBasis {
  dirichlet_0_pi,   // X_n = sqrt(2/pi) sin(n x) on [0,pi], lambda_n = n^2, n >= 1
  periodic_0_2pi,   // X_0 = 1/sqrt(2pi); X_n = cos/sin(n x)/sqrt(pi), lambda_n = n^2
};

struct HeatMode {
  int n = 1;
  double a = 0.0;
  bool sine = true;  // cos/sin choice for the periodic basis; ignored for Dirichlet
};

/// Finite eigenfunction superposition u(x,t) = sum a_n X_n(x) e^{-kappa lambda_n t}
/// with L2-normalized eigenfunctions.
class HeatSeriesSolution {
 public:
  HeatSeriesSolution(HeatBasis basis, double kappa, std::vector<HeatMode> modes)
      : basis_(basis), kappa_(kappa), modes_(std::move(modes)) {
    if (!(kappa_ > 0.0)) throw config_error("heat oracle: diffusivity must be positive");
    if (modes_.empty()) throw config_error("heat oracle: no modes");
    for (const auto& m : modes_) {
      if (m.n < 0 || (basis_ == HeatBasis::dirichlet_0_pi && m.n < 1))
        throw config_error("heat oracle: invalid mode index");
      if (!std::isfinite(m.a)) throw config_error("heat oracle: non-convergent coefficients");
    }
  }

  double domain_length() const { return basis_ == HeatBasis::dirichlet_0_pi ? pi : 2 * pi; }
  double kappa() const { return kappa_; }
  const std::vector<HeatMode>& modes() const { return modes_; }

  static double lambda(int n) { return double(n) * n; }

  double eigenfunction(const HeatMode& m, double x) const {
    if (basis_ == HeatBasis::dirichlet_0_pi) return std::sqrt(2.0 / pi) * std::sin(m.n * x);
    if (m.n == 0) return 1.0 / std::sqrt(2 * pi);
    return (m.sine ? std::sin(m.n * x) : std::cos(m.n * x)) / std::sqrt(pi);
  }

  double eigenfunction_sup(const HeatMode& m) const {
    if (basis_ == HeatBasis::dirichlet_0_pi) return std::sqrt(2.0 / pi);
    return m.n == 0 ? 1.0 / std::sqrt(2 * pi) : 1.0 / std::sqrt(pi);
  }

  double operator()(double x, double t) const {
    if (t < 0.0) throw domain_error("heat oracle: t must be >= 0");
    double u = 0.0;
    for (const auto& m : modes_)
      u += m.a * eigenfunction(m, x) * std::exp(-kappa_ * lambda(m.n) * t);
    return u;
  }

  /// Exact L2 norm via orthonormality.
  double l2_norm(double t) const {
    double s = 0.0;
    for (const auto& m : modes_)
      s += m.a * m.a * std::exp(-2 * kappa_ * lambda(m.n) * t);
    return std::sqrt(s);
  }

  /// Dense scan for the sup norm (refined by local parabolic fit).
  double sup_norm(double t, int samples = 8192) const {
    const double L = domain_length();
    double best = 0.0;
    for (int i = 0; i <= samples; ++i) {
      const double v = std::abs((*this)(L * i / samples, t));
      best = std::max(best, v);
    }
    return best;
  }

  double crest_factor(double t) const {
    return std::sqrt(domain_length()) * sup_norm(t) / l2_norm(t);
  }

  /// Smallest eigenvalue among active modes.
  double lambda_min() const {
    double lm = std::numeric_limits<double>::infinity();
    for (const auto& m : modes_)
      if (m.a != 0.0) lm = std::min(lm, lambda(m.n));
    return lm;
  }

  /// The envelope bounding the crest factor for all t:
  ///   S_f(t) = L^{1/2} [sum |a_n| max|X_n| q_n(t)] / [sum a_n^2 q_n(t)^2]^{1/2},
  /// with q_n(t) = e^{-kappa (lambda_n - lambda_min) t}. For large t it tends
  /// to L^{1/2} max|X| of the lowest active mode.
  double cf_envelope(double t) const {
    const double lm = lambda_min();
    double num = 0.0, den = 0.0;
    for (const auto& m : modes_) {
      const double q = std::exp(-kappa_ * (lambda(m.n) - lm) * t);
      num += std::abs(m.a) * eigenfunction_sup(m) * q;
      den += m.a * m.a * q * q;
    }
    return std::sqrt(domain_length()) * num / std::sqrt(den);
  }

  /// Large-t limit of the crest factor: the constant crest factor of the
  /// surviving lowest-eigenvalue combination.
  double cf_asymptote(int samples = 8192) const {
    const double lm = lambda_min();
    const double L = domain_length();
    double sup = 0.0, l2 = 0.0;
    for (int i = 0; i <= samples; ++i) {
      const double x = L * i / samples;
      double v = 0.0;
      for (const auto& m : modes_)
        if (m.a != 0.0 && lambda(m.n) == lm) v += m.a * eigenfunction(m, x);
      sup = std::max(sup, std::abs(v));
    }
    for (const auto& m : modes_)
      if (m.a != 0.0 && lambda(m.n) == lm) l2 += m.a * m.a;
    return std::sqrt(L) * sup / std::sqrt(l2);
  }

 private:
  HeatBasis basis_;
  double kappa_;
  std::vector<HeatMode> modes_;
};

}  // namespace crestlab::oracles
