#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "crestlab/field.hpp"

namespace crestlab::oracles {

/// Exact solution of u_t = eps u_xx - u u_x on [0,pi], u(0)=u(pi)=0, via the
/// Cole-Hopf substitution u = -2 eps v_x / v. The potential v solves the heat
/// equation with Neumann data v(x,0) = g(x) = exp(-(1/2 eps) int_0^x phi0),
/// expanded in the cosine series
///   v(x,t) = a_0/2 + sum_{n>=1} a_n e^{-n^2 eps t} cos(n x),
///   a_n = 2 pi int_0^pi g(x) cos(n x) dx           (alpha fixed to 1).
/// The integral is evaluated by the cosine-interpolant rule on 4*n_max
/// uniform nodes (exact for the interpolant, spectrally accurate for smooth g).
class BurgersColeHopf {
 public:
  BurgersColeHopf(const std::function<double(double)>& phi0, double eps,
                  int n_max = 4096)
      : eps_(eps), n_max_(n_max) {
    if (!(eps_ > 0.0)) throw config_error("burgers oracle: eps must be positive");
    if (n_max_ < 16) throw config_error("burgers oracle: n_max too small");
    build(phi0);
  }

  double eps() const { return eps_; }
  const std::vector<double>& coefficients() const { return a_; }

  double v(double x, double t) const {
    double s = 0.5 * a_[0];
    const int cut = cutoff(t);
    for (int n = 1; n <= cut; ++n)
      s += a_[n] * std::exp(-double(n) * n * eps_ * t) * std::cos(n * x);
    return s;
  }

  double u(double x, double t) const {
    const double vv = checked_v(x, t);
    double num = 0.0;
    const int cut = cutoff(t);
    for (int n = 1; n <= cut; ++n)
      num += n * a_[n] * std::exp(-double(n) * n * eps_ * t) * std::sin(n * x);
    return 2.0 * eps_ * num / vv;
  }

  /// PDE residual u_t - eps u_xx + u u_x evaluated from the series itself.
  double residual(double x, double t) const {
    const double vv = checked_v(x, t);
    double vx = 0.0, vxx = 0.0, vxxx = 0.0;
    const int cut = cutoff(t);
    for (int n = 1; n <= cut; ++n) {
      const double e = a_[n] * std::exp(-double(n) * n * eps_ * t);
      const double nn = n;
      vx -= nn * e * std::sin(n * x);
      vxx -= nn * nn * e * std::cos(n * x);
      vxxx += nn * nn * nn * e * std::sin(n * x);
    }
    const double w = vx / vv;
    const double wx = vxx / vv - w * w;
    const double wxx = vxxx / vv - w * (vxx / vv) - 2.0 * w * wx;
    const double wt = eps_ * (vxxx / vv) - w * (eps_ * vxx / vv);
    return -2.0 * eps_ * wt + 2.0 * eps_ * eps_ * wxx + 4.0 * eps_ * eps_ * w * wx;
  }

  /// Composite Simpson of u^2 over [0,pi].
  double l2_norm(double t, int intervals = 4096) const {
    double s = 0.0;
    const double h = pi / intervals;
    for (int i = 0; i <= intervals; ++i) {
      const double ui = u(i * h, t);
      const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      s += w * ui * ui;
    }
    return std::sqrt(s * h / 3.0);
  }

  double sup_norm(double t, int samples = 4096) const {
    double best = 0.0;
    for (int i = 0; i <= samples; ++i)
      best = std::max(best, std::abs(u(pi * i / samples, t)));
    return best;
  }

  /// Bounded crest factor on [0,pi]: sqrt(pi) sup / l2. Tends to sqrt(2).
  double crest_factor(double t) const {
    return std::sqrt(pi) * sup_norm(t) / l2_norm(t);
  }

 private:
  int cutoff(double t) const {
    if (t <= 0.0) return effective_n_;
    // e^{-n^2 eps t} below 1e-18 contributes nothing at double precision
    const int n_t = static_cast<int>(std::ceil(std::sqrt(42.0 / (eps_ * t)))) + 8;
    return std::min(effective_n_, n_t);
  }

  double checked_v(double x, double t) const {
    const double vv = v(x, t);
    // positivity holds analytically; a value inside the cancellation noise of
    // the series sum signals that the truncated ratio is unreliable
    double scale = 0.5 * std::abs(a_[0]);
    const int cut = cutoff(t);
    for (int n = 1; n <= cut; ++n)
      scale += std::abs(a_[n]) * std::exp(-double(n) * n * eps_ * t);
    if (!(vv > 1e-14 * scale))
      throw degenerate_field_error(
          "burgers oracle: v fell below the positivity floor (truncation failure)");
    return vv;
  }

  void build(const std::function<double(double)>& phi0) {
    const int M = 4 * n_max_;
    // sine-expand phi0 so the antiderivative is available in closed form
    PeriodicGrid ext(1, 2 * pi, 2 * M);
    std::vector<cdouble> samples(2 * M), coeffs(2 * M);
    for (int j = 0; j < 2 * M; ++j) {
      const double x = pi * j / M;  // odd periodic extension over [0, 2 pi)
      samples[j] = j <= M ? phi0(x) : -phi0(2 * pi - x);
    }
    fft::analysis(ext, samples.data(), coeffs.data());
    std::vector<double> b(M, 0.0);  // phi0 = sum b_m sin(m x)
    for (int m = 1; m < M; ++m) b[m] = -2.0 * coeffs[m].imag();

    // I(x) = int_0^x phi0 = sum b_m (1 - cos(m x))/m, cosine part via one FFT
    double csum = 0.0;
    std::vector<cdouble> q(2 * M, cdouble{0.0, 0.0});
    for (int m = 1; m < M; ++m) {
      if (b[m] == 0.0) continue;
      csum += b[m] / m;
      q[m] = q[2 * M - m] = cdouble{0.5 * b[m] / m, 0.0};
    }
    std::vector<cdouble> h(2 * M);
    fft::synthesis(ext, q.data(), h.data());

    std::vector<cdouble> gsamp(2 * M);
    for (int j = 0; j <= M; ++j) {
      const double I = csum - h[j].real();
      gsamp[j] = std::exp(-I / (2.0 * eps_));
      if (j > 0 && j < M) gsamp[2 * M - j] = gsamp[j];  // even extension
    }
    fft::analysis(ext, gsamp.data(), coeffs.data());

    // a_n = 2 pi int_0^pi g cos(nx) dx = 2 pi^2 c_n for the interpolant
    a_.assign(n_max_ + 1, 0.0);
    for (int n = 0; n <= n_max_; ++n) a_[n] = 2.0 * pi * pi * coeffs[n].real();
    if (!(a_[0] > 0.0))
      throw config_error("burgers oracle: non-convergent coefficients (a_0 <= 0)");

    double amax = 0.0;
    for (double an : a_) amax = std::max(amax, std::abs(an));
    effective_n_ = n_max_;
    while (effective_n_ > 16 && std::abs(a_[effective_n_]) < 1e-20 * amax) --effective_n_;
  }

  double eps_;
  int n_max_;
  int effective_n_ = 0;
  std::vector<double> a_;
};

}  // namespace crestlab::oracles
