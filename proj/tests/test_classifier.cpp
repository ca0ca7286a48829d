#include <catch2/catch.hpp>

#include <random>

#include "crestlab/classifier.hpp"

using namespace crestlab;
using namespace crestlab::classifier;

namespace {

std::vector<double> logistic_series(std::size_t n, double x0 = 0.123, double burn = 500) {
  std::vector<double> s;
  s.reserve(n);
  double x = x0;
  for (std::size_t i = 0; i < n + burn; ++i) {
    x = 4.0 * x * (1.0 - x);
    if (i >= burn) s.push_back(x);
  }
  return s;
}

CrestSeries make_series(const std::vector<double>& cf, double dt,
                        const std::vector<double>& sup = {}) {
  CrestSeries s;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    CrestSample c;
    c.t = (i + 1) * dt;
    c.C_f = cf[i];
    c.sup_norm = sup.empty() ? cf[i] : sup[i];
    c.denom = 1.0;
    s.samples.push_back(c);
  }
  return s;
}

}  // namespace

TEST_CASE("0-1 test: regular inputs score near zero, logistic map near one") {
  std::vector<double> sine(2048);
  for (std::size_t i = 0; i < sine.size(); ++i)
    sine[i] = std::sin(2 * pi * i / 64.0);
  REQUIRE(zero_one_chaos_K(sine) < 0.1);

  REQUIRE(zero_one_chaos_K(logistic_series(2000)) > 0.9);

  std::vector<double> constant(512, 2.0);
  REQUIRE(zero_one_chaos_K(constant) == 0.0);
}

TEST_CASE("cf_statistics: constant series") {
  const CrestSeries s = make_series(std::vector<double>(512, 1.7), 0.01);
  const CfStatistics st = cf_statistics(s);
  REQUIRE(st.mean == Approx(1.7).epsilon(1e-13));
  REQUIRE(st.std_dev < 1e-12);
  REQUIRE(st.flatness == 1.0);
  REQUIRE(st.burst_fraction == 0.0);
  REQUIRE(st.trend_slope == Approx(0.0).margin(1e-12));
  REQUIRE(classify(st).verdict == Verdict::steady);
}

TEST_CASE("cf_statistics: needs 256 samples after the trim") {
  const CrestSeries s = make_series(std::vector<double>(200, 1.0), 0.01);
  REQUIRE_THROWS_AS(cf_statistics(s), domain_error);
}

TEST_CASE("cf_statistics: pure sinusoid is periodic with high strength") {
  std::vector<double> cf(2048);
  for (std::size_t i = 0; i < cf.size(); ++i)
    cf[i] = 2.0 + 0.5 * std::sin(2 * pi * i / 128.0);
  const CrestSeries s = make_series(cf, 0.01);
  const CfStatistics st = cf_statistics(s);
  REQUIRE(st.period_strength > 0.95);
  REQUIRE(st.chaos_K < 0.1);
  REQUIRE(st.dominant_period == Approx(1.28).epsilon(0.02));
  REQUIRE(classify(st).verdict == Verdict::periodic_or_quasiperiodic);
}

TEST_CASE("cf_statistics: scale invariance of the shape measures") {
  std::vector<double> base = logistic_series(1600);
  for (auto& v : base) v = 1.0 + v;
  const CfStatistics a = cf_statistics(make_series(base, 0.05));
  std::vector<double> scaled = base;
  for (auto& v : scaled) v *= 37.0;
  const CfStatistics b = cf_statistics(make_series(scaled, 0.05));
  REQUIRE(a.flatness == Approx(b.flatness).epsilon(1e-10));
  REQUIRE(a.burst_fraction == Approx(b.burst_fraction).margin(1e-12));
  REQUIRE(a.period_strength == Approx(b.period_strength).epsilon(1e-8));
  REQUIRE(b.mean == Approx(37.0 * a.mean).epsilon(1e-12));
  REQUIRE(b.std_dev == Approx(37.0 * a.std_dev).epsilon(1e-10));
  // the 0-1 statistic is scale-dependent only through roundoff on detrended data
  REQUIRE(std::abs(a.chaos_K - b.chaos_K) < 0.05);
}

TEST_CASE("classify: decaying series with vanishing amplitude") {
  std::vector<double> cf(1024), sup(1024);
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const double t = (i + 1) * 0.5;
    cf[i] = 2.0 * std::pow(t, -0.25);
    sup[i] = 5.0 * std::pow(t, -0.5);
  }
  const CfStatistics st = cf_statistics(make_series(cf, 0.5, sup));
  REQUIRE(st.trend_slope == Approx(-0.25).margin(0.01));
  REQUIRE(st.sup_tail_vanishes);
  REQUIRE(classify(st).verdict == Verdict::decaying);
}

TEST_CASE("classify: chaotic series split by mean level and flatness") {
  // mild: chaotic but mean below C*
  std::vector<double> mild = logistic_series(1800);
  for (auto& v : mild) v = 1.0 + 0.8 * v;
  const CfStatistics m = cf_statistics(make_series(mild, 0.01));
  REQUIRE(m.chaos_K >= 0.8);
  REQUIRE(classify(m).verdict == Verdict::mild_turbulence);

  // stationary hard: chaotic, high mean, modest flatness
  std::vector<double> hard = logistic_series(1800, 0.2);
  for (auto& v : hard) v = 4.0 + 1.2 * v;
  const CfStatistics h = cf_statistics(make_series(hard, 0.01));
  REQUIRE(h.chaos_K >= 0.8);
  REQUIRE(h.mean >= 3.0);
  REQUIRE(h.flatness <= 6.0);
  REQUIRE(classify(h).verdict == Verdict::stationary_hard_turbulence);

  // intermittent: rare large bursts on the same chaotic baseline
  std::vector<double> burst = hard;
  for (std::size_t i = 0; i < burst.size(); i += 97) burst[i] += 30.0;
  const CfStatistics b = cf_statistics(make_series(burst, 0.01));
  REQUIRE(b.chaos_K >= 0.8);
  REQUIRE(b.flatness > 6.0);
  REQUIRE(classify(b).verdict == Verdict::intermittent_turbulence);
}

TEST_CASE("classify: decision table is total") {
  CfStatistics s;
  s.cov = 0.5;
  s.trend_slope = 0.0;
  s.period_strength = 0.3;
  s.chaos_K = 0.5;  // neither regular nor chaotic
  s.mean = 2.0;
  REQUIRE(classify(s).verdict == Verdict::indeterminate);

  s.chaos_K = 0.9;
  s.mean = 10.0;
  s.flatness = 2.0;
  s.burst_fraction = 0.02;  // burst fraction alone flips to intermittent
  REQUIRE(classify(s).verdict == Verdict::intermittent_turbulence);
  s.burst_fraction = 0.0;
  REQUIRE(classify(s).verdict == Verdict::stationary_hard_turbulence);
}

TEST_CASE("coefficient bound: uniform coefficients reproduce the printed bound") {
  // b_n = 1/5 over |n| <= 2: B = 1, delta = 1/5
  const std::vector<double> a{0.2, 0.2, 0.2};
  const std::vector<double> lam{0.0, 0.0, 0.0};
  const CoefficientBound r = coefficient_crest_bound(a, lam, 0.0, 1.0);
  REQUIRE(r.B == Approx(1.0).epsilon(1e-14));
  REQUIRE(r.delta == Approx(0.2).epsilon(1e-14));
  REQUIRE(r.K_f_tight == Approx(std::sqrt(10.0 * pi)).epsilon(1e-13));
  REQUIRE(r.K_f_tight == Approx(5.6050).margin(2e-5));
  REQUIRE(r.K_f == Approx(std::sqrt(20.0 * pi)).epsilon(1e-13));

  // the mode construction achieves the tight form at its own K0 = 1/sqrt(2pi)
  const std::vector<cdouble> ac{0.2, 0.2, 0.2};
  const double cf = mode_superposition_crest(ac, lam, 0.0);
  const CoefficientBound rn = coefficient_crest_bound(a, lam, 0.0, 1.0 / std::sqrt(2 * pi));
  REQUIRE(cf == Approx(std::sqrt(5.0)).epsilon(1e-12));
  REQUIRE(cf == Approx(rn.K_f_tight).epsilon(1e-12));
  REQUIRE(cf <= rn.K_f);
}

TEST_CASE("coefficient bound: single coefficient and the large-time limit") {
  const CoefficientBound r = coefficient_crest_bound({0.7}, {0.0}, 0.0, 2.0);
  REQUIRE(r.B == Approx(0.7));
  REQUIRE(r.delta == Approx(0.7));
  REQUIRE(r.K_f == Approx(2.0 * 2.0 * std::sqrt(pi)).epsilon(1e-13));

  // decaying higher modes: K_f -> 2 K0 sqrt(pi) as t grows
  const std::vector<double> a{0.5, 1.0, 0.8};
  const std::vector<double> lam{0.0, 1.0, 4.0};
  const double K0 = 1.0;
  const CoefficientBound late = coefficient_crest_bound(a, lam, 40.0, K0);
  REQUIRE(late.K_f == Approx(2.0 * K0 * std::sqrt(pi)).epsilon(1e-6));

  REQUIRE_THROWS_AS(coefficient_crest_bound({0.0, 0.0}, {0.0, 0.0}, 0.0, 1.0), domain_error);
}

TEST_CASE("coefficient bound: geometric coefficients and prefix minimality") {
  // b = 2^{-|n|}: entries 1, 1/2, 1/2, 1/4, 1/4, ...
  std::vector<double> a(8), lam(8, 0.0);
  for (int n = 0; n < 8; ++n) a[n] = std::pow(2.0, -n);
  const CoefficientBound r = coefficient_crest_bound(a, lam, 0.0, 1.0);
  // brute-force check of the sorted-prefix rule
  REQUIRE(r.delta == Approx(0.5).epsilon(1e-14));
  REQUIRE(r.prefix_count == 2);
  REQUIRE(r.prefix_sum >= 0.5 * r.B);
  REQUIRE(r.prefix_sum - r.delta < 0.5 * r.B);  // minimality

  std::mt19937_64 rng(211);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> av(12), lv(12);
    for (int i = 0; i < 12; ++i) {
      av[i] = u(rng);
      lv[i] = i * i * 0.1;
    }
    const double t = u(rng);
    const CoefficientBound rr = coefficient_crest_bound(av, lv, t, 1.0);
    REQUIRE(rr.prefix_sum >= 0.5 * rr.B);
    REQUIRE(rr.prefix_sum - rr.delta < 0.5 * rr.B);
  }
}

TEST_CASE("coefficient bound: crest factor stays below K_f for random coefficient sets") {
  std::mt19937_64 rng(213);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double K0 = 1.0 / std::sqrt(2 * pi);
  for (int trial = 0; trial < 50; ++trial) {
    const int N = 6;
    std::vector<cdouble> ac(N + 1);
    std::vector<double> aabs(N + 1), lam(N + 1);
    ac[0] = std::abs(gauss(rng));
    aabs[0] = std::abs(ac[0]);
    lam[0] = 0.0;
    for (int n = 1; n <= N; ++n) {
      ac[n] = cdouble{gauss(rng), gauss(rng)};
      aabs[n] = std::abs(ac[n]);
      lam[n] = double(n) * n;
    }
    for (double t : {0.0, 0.05, 0.3, 1.0}) {
      const double cf = mode_superposition_crest(ac, lam, t);
      const CoefficientBound r = coefficient_crest_bound(aabs, lam, t, K0);
      REQUIRE(cf <= r.K_f * (1.0 + 1e-12));
    }
  }
}
