#pragma once

#include <cmath>
#include <vector>

#include "crestlab/crest.hpp"
#include "crestlab/solvers/record.hpp"

namespace crestlab::bounds {

struct Bound2dInputs {
  double nu = 0.01;
  double L = 2 * pi;
  double phi0 = 1.0;
  double phi1 = 1.0;
  double lambda_f = 1.0;
  double eta = 1.82;
  double c1 = 0.5;
  double c2 = 0.5;
};

struct Bound2dResult {
  bool applicable = true;
  double value = 0.0;
  double eta_hat = 0.0;
  double bracket = 0.0;
  double tau = 0.0;
  double lambda_0 = 0.0;
};

/// Long-time-averaged crest-factor bound for the forced 2D problem:
///   <C_f> <= (1/sqrt(4 pi)) (L/lambda_0)
///            [eta_hat + (1/2) ln(Phi_0 Phi_1 / nu^2) + (1/2e)(1/tau^2 Phi_1)]^{1/2},
/// eta_hat = eta - (1/4) ln(4 c1 c2), c1 + c2 = 1.
inline Bound2dResult bound_2d(const Bound2dInputs& b) {
  if (!(b.nu > 0.0) || !(b.phi0 > 0.0) || !(b.phi1 > 0.0) || !(b.lambda_f > 0.0))
    throw domain_error("bound_2d: nu, Phi_0, Phi_1, lambda_f must be positive");
  if (!(b.c1 > 0.0) || !(b.c1 < 1.0) || !(b.c2 > 0.0) || !(b.c2 < 1.0) ||
      std::abs(b.c1 + b.c2 - 1.0) > 1e-12)
    throw domain_error("bound_2d: need c1, c2 in (0,1) with c1 + c2 = 1");

  const DerivedConstants dc = derived_constants(b.nu, b.L, b.lambda_f);
  Bound2dResult r;
  r.tau = dc.tau;
  r.lambda_0 = dc.lambda_0;
  r.eta_hat = b.eta - 0.25 * std::log(4.0 * b.c1 * b.c2);
  r.bracket = r.eta_hat + 0.5 * std::log(b.phi0 * b.phi1 / (b.nu * b.nu)) +
              (0.5 / std::exp(1.0)) / (dc.tau * dc.tau * b.phi1);
  if (r.bracket < 0.0) {
    r.applicable = false;  // possible at very large nu
    return r;
  }
  r.value = (1.0 / std::sqrt(4.0 * pi)) * (b.L / dc.lambda_0) * std::sqrt(r.bracket);
  return r;
}

struct Bound3dInputs {
  double L = 2 * pi;
  double nu = 0.1;
  double lambda_0 = 1.0;
  double mean_du_inf = 1.0;  // <||Du||_inf>
  double c1 = 3.0;
  double c2 = 1.0;  // c(2,3,L); calibrated GNI constant in practice
};

/// Conditional 3D bound: L^{3/2} c2 lambda_0^{-3/4}
///   (c1 nu^{-1} <||Du||_inf> + lambda_0^{-2})^{3/8}.
inline double bound_3d(const Bound3dInputs& b) {
  if (!(b.L > 0.0) || !(b.nu > 0.0) || !(b.lambda_0 > 0.0) || !(b.mean_du_inf > 0.0) ||
      !(b.c1 > 0.0) || !(b.c2 > 0.0))
    throw domain_error("bound_3d: all inputs must be positive");
  const double inner = b.c1 * b.mean_du_inf / b.nu + 1.0 / (b.lambda_0 * b.lambda_0);
  return std::pow(b.L, 1.5) * b.c2 * std::pow(b.lambda_0, -0.75) * std::pow(inner, 0.375);
}

/// Same with the lambda_0^{-2} term dropped (the large-gradient regime).
inline double approx_3d(const Bound3dInputs& b) {
  if (!(b.L > 0.0) || !(b.nu > 0.0) || !(b.lambda_0 > 0.0) || !(b.mean_du_inf > 0.0) ||
      !(b.c1 > 0.0) || !(b.c2 > 0.0))
    throw domain_error("approx_3d: all inputs must be positive");
  const double inner = b.c1 * b.mean_du_inf / b.nu;
  return std::pow(b.L, 1.5) * b.c2 * std::pow(b.lambda_0, -0.75) * std::pow(inner, 0.375);
}

struct HolderCheck {
  double lhs = 0.0;  // <(AB)^alpha>
  double rhs = 0.0;  // <A>^alpha <B>^alpha
  bool holds = false;
  double tolerance = 0.0;
};

/// <(AB)^alpha> <= <A>^alpha <B>^alpha for 0 < alpha <= 1/2 and positive
/// series. Exact for the running-mean discretization; the tolerance only
/// covers the finite-horizon limsup budget.
inline HolderCheck holder_lemma_check(const std::vector<double>& A,
                                      const std::vector<double>& B, double alpha,
                                      double horizon_T = 0.0, double window = 0.2) {
  if (!(alpha > 0.0) || alpha > 0.5)
    throw domain_error("holder_lemma_check: alpha must lie in (0, 1/2]");
  if (A.size() != B.size() || A.empty())
    throw domain_error("holder_lemma_check: mismatched or empty series");
  std::vector<double> ab(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!(A[i] > 0.0) || !(B[i] > 0.0))
      throw domain_error("holder_lemma_check: series must be positive");
    ab[i] = std::pow(A[i] * B[i], alpha);
  }
  HolderCheck h;
  h.lhs = long_time_average(ab, window);
  h.rhs = std::pow(long_time_average(A, window), alpha) *
          std::pow(long_time_average(B, window), alpha);
  h.tolerance = horizon_T > 0.0 ? 5.0 / horizon_T : 0.0;
  h.holds = h.lhs <= h.rhs + h.tolerance;
  return h;
}

struct TafReport {
  bool applicable = false;  // provisos tau^2 Phi_0 > 1 and tau^2 Phi_1 > 1
  double mean_f1_f0 = 0.0;
  double mean_f2_f1 = 0.0;
  double mean_du_inf = 0.0;
  double lambda_0 = 0.0;
  double slack0 = 0.0;  // lambda_0^{-2} - <F_1/F_0>
  double slack1 = 0.0;  // c1/nu <||Du||_inf> + lambda_0^{-2} - <F_2/F_1>
  double tolerance = 0.0;  // 5 / T
};

/// Time-averaged ladder-ratio bounds along a forced trajectory.
inline TafReport taf_checks(const solvers::TrajectoryRecord& rec, double lambda_f_value,
                            double c1 = 3.0, double window = 0.2) {
  const auto& led = rec.ledger;
  if (led.samples.size() < 8) throw domain_error("taf_checks: trajectory too short");
  if (led.phi.size() < 2) throw domain_error("taf_checks: forcing ladder missing");
  TafReport r;
  const double tau = led.tau;
  if (!(tau * tau * led.phi[0] > 1.0) || !(tau * tau * led.phi[1] > 1.0))
    return r;  // provisos violated: bound inapplicable
  r.applicable = true;
  r.lambda_0 = derived_constants(rec.nu, rec.L_phys, lambda_f_value).lambda_0;

  const std::size_t n = led.samples.size();
  std::vector<double> r10(n), r21(n);
  for (std::size_t i = 0; i < n; ++i) {
    r10[i] = led.samples[i].F.at(1) / led.samples[i].F.at(0);
    r21[i] = led.samples[i].F.at(2) / led.samples[i].F.at(1);
  }
  r.mean_f1_f0 = long_time_average(r10, window);
  r.mean_f2_f1 = long_time_average(r21, window);
  r.mean_du_inf = long_time_average(rec.du_inf, window);
  const double l0inv2 = 1.0 / (r.lambda_0 * r.lambda_0);
  r.slack0 = l0inv2 - r.mean_f1_f0;
  r.slack1 = c1 * r.mean_du_inf / rec.nu + l0inv2 - r.mean_f2_f1;
  const double T = led.samples.back().t - led.samples.front().t;
  r.tolerance = T > 0.0 ? 5.0 / T : 0.0;
  return r;
}

struct KolmogorovRegimeReport {
  double sd_ratio_mean = 0.0;   // <||Du||_inf / (L^{-3/2} ||Du||_2)>
  double sd_ratio_min = 0.0;
  double sd_ratio_max = 0.0;
  bool in_regime = false;       // sd ratio within [1/2, 2]
  double cf_est_mean = 0.0;     // L^{3/2} ||omega||_inf / ||omega||_2
  bool cf_est_near_one = false; // within [1/(2 sqrt 2), 2 sqrt 2] when in regime
  double epsilon = 0.0;
  double lambda_K = 0.0;
  double l_21 = 0.0;            // length scale l_{2,1}
  double rhs = 0.0;             // c_K lambda_K^{-2} + lambda_0^{-2}
  bool l_bound_holds = false;   // l^{-2} <= rhs
};

/// Kolmogorov-regime chain: the sup/L2 gradient ratio gates the "crest factor
/// near one" assertion, and l_{2,1} is compared against the dissipation
/// length combination.
inline KolmogorovRegimeReport kolmogorov_regime(const solvers::TrajectoryRecord& rec,
                                                double lambda_0, double C_K = 1.0,
                                                double c_K = 1.0, double window = 0.2) {
  const std::size_t n = rec.du_inf.size();
  if (n == 0 || rec.du_l2_sq.size() != n || rec.omega_inf.size() != n ||
      rec.omega_l2.size() != n)
    throw domain_error("kolmogorov_regime: incomplete gradient/vorticity series");
  const double L = rec.L_phys;
  const double l32 = std::pow(L, 1.5);

  KolmogorovRegimeReport k;
  k.sd_ratio_min = std::numeric_limits<double>::infinity();
  double sd_sum = 0.0, cf_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sd = rec.du_inf[i] / (std::sqrt(rec.du_l2_sq[i]) / l32);
    sd_sum += sd;
    k.sd_ratio_min = std::min(k.sd_ratio_min, sd);
    k.sd_ratio_max = std::max(k.sd_ratio_max, sd);
    cf_sum += l32 * rec.omega_inf[i] / rec.omega_l2[i];
  }
  k.sd_ratio_mean = sd_sum / n;
  k.cf_est_mean = cf_sum / n;
  k.in_regime = k.sd_ratio_mean >= 0.5 && k.sd_ratio_mean <= 2.0;
  const double window_lo = 1.0 / (2.0 * std::sqrt(2.0));
  const double window_hi = 2.0 * std::sqrt(2.0);
  k.cf_est_near_one = k.cf_est_mean >= window_lo && k.cf_est_mean <= window_hi;

  const KolmogorovLength kl =
      kolmogorov_length(rec.nu, long_time_average(rec.du_l2_sq, window), L, C_K);
  k.epsilon = kl.epsilon;
  k.lambda_K = kl.lambda_K;
  k.l_21 = length_scale_lnr(rec.ledger.series_F(2), rec.ledger.series_F(1), 2, 1, window);
  k.rhs = c_K / (kl.lambda_K * kl.lambda_K) + 1.0 / (lambda_0 * lambda_0);
  k.l_bound_holds = 1.0 / (k.l_21 * k.l_21) <= k.rhs;
  return k;
}

}  // namespace crestlab::bounds
