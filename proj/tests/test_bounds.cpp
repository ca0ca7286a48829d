#include <catch2/catch.hpp>

#include <random>

#include "crestlab/bounds.hpp"

using namespace crestlab;
using namespace crestlab::bounds;
using crestlab::solvers::TrajectoryRecord;

TEST_CASE("bound_2d: eta_hat reduces to eta at c1 = c2 = 1/2") {
  Bound2dInputs b;
  b.c1 = b.c2 = 0.5;
  const Bound2dResult r = bound_2d(b);
  REQUIRE(r.eta_hat == Approx(1.82).epsilon(1e-14));
}

TEST_CASE("bound_2d: reference evaluation against a term-by-term oracle") {
  Bound2dInputs b;
  b.nu = 0.01;
  b.L = 2 * pi;
  b.phi0 = b.phi1 = 1.0;
  b.lambda_f = 1.0;
  const Bound2dResult r = bound_2d(b);

  // independent recomputation, term by term
  const double tau = b.L * b.L / b.nu;
  const double lambda0 = 1.0 / std::sqrt(1.0 + 1.0 / (b.L * b.L));
  const double bracket = 1.82 + 0.5 * std::log(1.0 / (0.01 * 0.01)) +
                         (1.0 / (2.0 * std::exp(1.0))) / (tau * tau);
  const double oracle = (1.0 / std::sqrt(4.0 * pi)) * (b.L / lambda0) * std::sqrt(bracket);
  REQUIRE(r.value == Approx(oracle).epsilon(1e-13));
  REQUIRE(r.value == Approx(4.55).margin(0.005));
  REQUIRE(r.tau == Approx(3947.8418).epsilon(1e-7));
}

TEST_CASE("bound_2d: monotone decreasing in nu, increasing in Phi0 Phi1") {
  Bound2dInputs b;
  b.nu = 0.02;
  double prev = bound_2d(b).value;
  for (double nu : {0.01, 0.005, 0.0025}) {
    b.nu = nu;
    const double v = bound_2d(b).value;
    REQUIRE(v > prev);
    prev = v;
  }

  b.nu = 0.01;
  b.phi0 = b.phi1 = 0.5;
  prev = bound_2d(b).value;
  for (double phi : {1.0, 2.0, 4.0}) {
    b.phi0 = b.phi1 = phi;
    const double v = bound_2d(b).value;
    REQUIRE(v > prev);
    prev = v;
  }
}

TEST_CASE("bound_2d: validation and the inapplicable branch") {
  Bound2dInputs bad;
  bad.c1 = 0.7;
  bad.c2 = 0.7;
  REQUIRE_THROWS_AS(bound_2d(bad), domain_error);

  Bound2dInputs neg;
  neg.nu = -1.0;
  REQUIRE_THROWS_AS(bound_2d(neg), domain_error);

  // large viscosity with weak forcing drives the log term negative while
  // tau^2 Phi_1 stays moderate
  Bound2dInputs huge;
  huge.nu = 10.0;
  huge.phi0 = huge.phi1 = 1e-2;
  const Bound2dResult r = bound_2d(huge);
  REQUIRE_FALSE(r.applicable);
}

TEST_CASE("bound_3d and approx_3d: arithmetic and ordering") {
  Bound3dInputs b;
  b.L = 2 * pi;
  b.nu = 0.1;
  b.lambda_0 = 1.0;
  b.mean_du_inf = 10.0;
  b.c1 = 3.0;
  b.c2 = 1.0;
  const double v = bound_3d(b);
  REQUIRE(v == Approx(std::pow(2 * pi, 1.5) * std::pow(301.0, 0.375)).epsilon(1e-13));
  REQUIRE(v == Approx(133.9).margin(0.1));

  std::mt19937_64 rng(201);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    Bound3dInputs s;
    s.L = u(rng);
    s.nu = u(rng);
    s.lambda_0 = u(rng);
    s.mean_du_inf = u(rng);
    s.c2 = u(rng);
    REQUIRE(approx_3d(s) <= bound_3d(s));
  }

  // 3/8 power law in the gradient-dominated regime
  Bound3dInputs p = b;
  p.lambda_0 = 1e6;  // lambda_0^{-2} negligible
  const double v1 = bound_3d(p);
  p.mean_du_inf *= 16.0;
  REQUIRE(bound_3d(p) / v1 == Approx(std::pow(16.0, 0.375)).epsilon(1e-9));
  REQUIRE(std::pow(16.0, 0.375) == Approx(2.8284).margin(2e-4));
}

TEST_CASE("holder_lemma_check: constants give equality") {
  std::vector<double> A(128, 4.0), B(128, 9.0);
  const HolderCheck h = holder_lemma_check(A, B, 0.5);
  REQUIRE(h.lhs == Approx(6.0).epsilon(1e-13));
  REQUIRE(h.rhs == Approx(6.0).epsilon(1e-13));
  REQUIRE(h.holds);
}

TEST_CASE("holder_lemma_check: random positive series never violate") {
  std::mt19937_64 rng(203);
  std::lognormal_distribution<double> ln(0.0, 1.0);
  for (double alpha : {0.1, 0.25, 0.5}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> A(300), B(300);
      for (int i = 0; i < 300; ++i) {
        A[i] = ln(rng);
        B[i] = ln(rng);
      }
      const HolderCheck h = holder_lemma_check(A, B, alpha);
      REQUIRE(h.lhs <= h.rhs + 1e-12);
    }
  }
}

TEST_CASE("holder_lemma_check: exponential series at alpha = 1/4") {
  std::vector<double> A(1000);
  for (int i = 0; i < 1000; ++i) A[i] = std::exp(10.0 * (i + 1) / 1000.0);
  const HolderCheck h = holder_lemma_check(A, A, 0.25);
  REQUIRE(h.lhs <= h.rhs);
  REQUIRE_THROWS_AS(holder_lemma_check(A, A, 0.75), domain_error);
  REQUIRE_THROWS_AS(holder_lemma_check(A, A, 0.0), domain_error);
}

namespace {

// synthetic ledger: J_n(t) for a single decaying mode k0 plus a forcing ladder
TrajectoryRecord single_mode_record(double nu, double L, int k0, double phi0,
                                    double lambda_f_inv_sq, double T, int samples) {
  TrajectoryRecord rec;
  rec.d = 2;
  rec.L_phys = L;
  rec.nu = nu;
  const double tau = L * L / nu;
  rec.ledger.tau = tau;
  const double kap2 = std::pow(2 * pi * k0 / L, 2);
  rec.ledger.phi = {phi0, phi0 * lambda_f_inv_sq, phi0 * lambda_f_inv_sq * lambda_f_inv_sq};
  for (int i = 0; i <= samples; ++i) {
    const double t = T * i / samples;
    const double j0 = std::exp(-2.0 * nu * kap2 * t);
    rec.ledger.append(t, {j0, kap2 * j0, kap2 * kap2 * j0});
    rec.du_inf.push_back(std::sqrt(kap2 * j0));  // schematic gradient scale
    rec.du_l2_sq.push_back(kap2 * j0);
    rec.omega_inf.push_back(std::sqrt(kap2 * j0));
    rec.omega_l2.push_back(std::sqrt(kap2 * j0));
  }
  return rec;
}

}  // namespace

TEST_CASE("taf_checks: ladder ratios of a pure-forcing record") {
  // J = 0, so F_n/F_r = Phi_n/Phi_r; slack0 = lambda_0^{-2} - lambda_f^{-2} = L^{-2}
  const double nu = 0.05, L = 2 * pi;
  TrajectoryRecord rec;
  rec.d = 2;
  rec.L_phys = L;
  rec.nu = nu;
  rec.ledger.tau = L * L / nu;
  const double lf_inv_sq = 16.0;  // k0 = 4 forcing
  rec.ledger.phi = {1.0, lf_inv_sq, lf_inv_sq * lf_inv_sq};
  for (int i = 0; i <= 100; ++i) {
    rec.ledger.append(0.1 * i, {0.0, 0.0, 0.0});
    rec.du_inf.push_back(0.0);
    rec.du_l2_sq.push_back(0.0);
  }
  const TafReport r = taf_checks(rec, 0.25);
  REQUIRE(r.applicable);
  REQUIRE(r.mean_f1_f0 == Approx(lf_inv_sq).epsilon(1e-12));
  REQUIRE(r.slack0 == Approx(1.0 / (L * L)).epsilon(1e-9));
  REQUIRE(r.slack1 >= 0.0);
}

TEST_CASE("taf_checks: single decaying mode with a forcing floor") {
  // k0 = 1 field decaying over k0f = 2 forcing: F1/F0 relaxes from J-dominated
  // (ratio kappa^2 = 1) to the forcing ratio 4, staying below lambda_0^{-2} + eps
  const double nu = 0.1, L = 2 * pi;
  TrajectoryRecord rec = single_mode_record(nu, L, 1, 1e-4, 4.0, 60.0, 600);
  const TafReport r = taf_checks(rec, 0.5);
  REQUIRE(r.applicable);
  const double l0inv2 = 4.0 + 1.0 / (L * L);
  REQUIRE(r.mean_f1_f0 <= l0inv2);
  REQUIRE(r.slack0 >= 0.0);
}

TEST_CASE("inequality residuals: zero field with forcing gives nonnegative slack") {
  // J = 0 so F = tau^2 Phi is constant: slack = tau Phi_1 >= 0 at every step
  TrajectoryRecord rec;
  rec.d = 2;
  rec.L_phys = 2 * pi;
  rec.nu = 0.1;
  const double tau = rec.L_phys * rec.L_phys / rec.nu;
  rec.ledger.tau = tau;
  rec.ledger.phi = {1.0, 4.0, 16.0};
  for (int i = 0; i < 20; ++i) {
    rec.ledger.append(0.1 * i, {0.0, 0.0, 0.0});
    rec.du_inf.push_back(0.0);
  }
  const solvers::ResidualReport rr = solvers::inequality_residuals(rec, tau);
  for (double s : rr.slack) {
    REQUIRE(s >= 0.0);
    REQUIRE(s == Approx(tau * 4.0).epsilon(1e-12));
  }
  REQUIRE_THROWS_AS(solvers::inequality_residuals(TrajectoryRecord{}, 1.0), domain_error);
}

TEST_CASE("taf_checks: proviso violation renders the bound inapplicable") {
  TrajectoryRecord rec = single_mode_record(0.1, 2 * pi, 1, 1e-12, 4.0, 10.0, 50);
  const TafReport r = taf_checks(rec, 0.5);
  REQUIRE_FALSE(r.applicable);
}

TEST_CASE("3D identities: ||omega||_2 = ||Du||_2 for divergence-free fields") {
  PeriodicGrid g(3, 2 * pi, 16);
  std::mt19937_64 rng(205);
  SpectralField u = random_band_limited(g, 3, 4, rng, 1.0);
  project_divergence_free(u);

  const double du_l2_sq = jn(u, 1);

  // curl via spectral derivatives
  auto d = [&](int comp, int axis) {
    MultiIndex m;
    m[axis] = 1;
    SpectralField scalar(g, 1);
    scalar[0] = u[comp];
    return spectral_derivative(scalar, m);
  };
  SpectralField omega(g, 3);
  const SpectralField d2u3 = d(2, 1), d3u2 = d(1, 2);
  const SpectralField d3u1 = d(0, 2), d1u3 = d(2, 0);
  const SpectralField d1u2 = d(1, 0), d2u1 = d(0, 1);
  for (std::size_t i = 0; i < g.points(); ++i) {
    omega[0][i] = d2u3[0][i] - d3u2[0][i];
    omega[1][i] = d3u1[0][i] - d1u3[0][i];
    omega[2][i] = d1u2[0][i] - d2u1[0][i];
  }
  REQUIRE(l2_norm_sq(omega) == Approx(du_l2_sq).epsilon(1e-10));
}

TEST_CASE("kolmogorov_regime: single-mode record sits in the window") {
  // u = (sin y, 0, 0) on [0,2pi]^3: ||Du||_inf = 1, ||Du||_2^2 = 4 pi^3,
  // omega = (0,0,-cos y) with the same norms
  const double L = 2 * pi;
  TrajectoryRecord rec;
  rec.d = 3;
  rec.L_phys = L;
  rec.nu = 0.5;
  rec.ledger.tau = L * L / rec.nu;
  rec.ledger.phi = {0.0, 0.0, 0.0};
  const double du2 = 4.0 * pi * pi * pi;
  for (int i = 0; i <= 63; ++i) {
    rec.ledger.append(0.1 * i, {du2, du2, du2});  // pure mode: all ratios 1
    rec.du_inf.push_back(1.0);
    rec.du_l2_sq.push_back(du2);
    rec.omega_inf.push_back(1.0);
    rec.omega_l2.push_back(std::sqrt(du2));
  }
  const KolmogorovRegimeReport k = kolmogorov_regime(rec, /*lambda_0=*/1.0, 1.0, 1.0);
  REQUIRE(k.sd_ratio_mean == Approx(std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(k.in_regime);
  REQUIRE(k.cf_est_mean == Approx(std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(k.cf_est_near_one);
  REQUIRE(k.l_21 == Approx(1.0).epsilon(1e-12));  // F2/F1 = 1
  REQUIRE(k.epsilon == Approx(rec.nu * du2 / (L * L * L)).epsilon(1e-12));
}

TEST_CASE("kolmogorov_regime: random 3D fields give order-one diagnostics") {
  PeriodicGrid g(3, 2 * pi, 16);
  std::mt19937_64 rng(207);
  SpectralField u = random_band_limited(g, 3, 4, rng, 0.0);
  project_divergence_free(u);

  // assemble a one-sample record from genuine spectral measurements
  double du_inf = 0.0;
  for (int comp = 0; comp < 3; ++comp)
    for (int axis = 0; axis < 3; ++axis) {
      MultiIndex m;
      m[axis] = 1;
      SpectralField s(g, 1);
      s[0] = u[comp];
      du_inf = std::max(du_inf, sup_norm(spectral_derivative(s, m)));
    }
  const double du2 = jn(u, 1);

  TrajectoryRecord rec;
  rec.d = 3;
  rec.L_phys = g.L;
  rec.nu = 1.0;
  rec.ledger.tau = g.L * g.L;
  rec.ledger.phi = {0.0, 0.0, 0.0};
  for (int i = 0; i < 8; ++i) {
    rec.ledger.append(i, {jn(u, 0), jn(u, 1), jn(u, 2)});
    rec.du_inf.push_back(du_inf);
    rec.du_l2_sq.push_back(du2);
    rec.omega_inf.push_back(du_inf);          // same field scale
    rec.omega_l2.push_back(std::sqrt(du2));   // curl identity
  }
  const KolmogorovRegimeReport k = kolmogorov_regime(rec, 1.0, 1.0, 1.0);
  REQUIRE(k.sd_ratio_mean > 0.1);
  REQUIRE(k.sd_ratio_mean < 10.0);
  REQUIRE(k.cf_est_mean > 0.1);
  REQUIRE(k.cf_est_mean < 10.0);
}
