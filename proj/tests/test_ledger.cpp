#include <catch2/catch.hpp>

#include "crestlab/ledger.hpp"
#include "crestlab/make_field.hpp"

using namespace crestlab;

TEST_CASE("jn: Taylor-Green ladder") {
  PeriodicGrid g(2, 2 * pi, 32);
  const SpectralField u = taylor_green_velocity(g);
  REQUIRE(jn(u, 0) == Approx(2 * pi * pi).epsilon(1e-12));
  REQUIRE(jn(u, 1) == Approx(4 * pi * pi).epsilon(1e-12));
  REQUIRE(jn(u, 2) == Approx(8 * pi * pi).epsilon(1e-12));
  REQUIRE(jn(u, 0) == Approx(l2_norm_sq(u)).epsilon(1e-13));
  REQUIRE_THROWS_AS(jn(u, -1), domain_error);
}

TEST_CASE("jn: multinomial collapse matches the explicit multi-index sum") {
  std::mt19937_64 rng(41);
  for (int d = 1; d <= 3; ++d) {
    PeriodicGrid g(d, d == 2 ? 1.3 : 2 * pi, d == 3 ? 16 : 32);
    const SpectralField u = random_band_limited(g, d, g.N / 3, rng, 1.0);
    for (int n = 0; n <= 4; ++n)
      REQUIRE(jn(u, n) == Approx(jn_by_multi_index(u, n)).epsilon(1e-10));
  }
}

TEST_CASE("jn: pure-mode ratio is exactly the squared wavenumber") {
  PeriodicGrid g(1, 5.0, 32);
  SpectralField u(g, 1);
  add_cos_mode(u, 0, 3, 0, 0, 0.7);
  const double kappa_sq = std::pow(2 * pi * 3 / g.L, 2);
  for (int n = 0; n < 4; ++n)
    REQUIRE(jn(u, n + 1) / jn(u, n) == Approx(kappa_sq).epsilon(1e-13));
}

TEST_CASE("phi_n: ladder of the forcing") {
  PeriodicGrid g(2, 2 * pi, 32);
  const SpectralField f = taylor_green_velocity(g);
  REQUIRE(phi_n(f, 0) == Approx(2 * pi * pi).epsilon(1e-12));

  SpectralField single(g, 1);
  add_sin_mode(single, 0, 0, 4, 0, 1.0);
  for (int n = 0; n < 3; ++n)
    REQUIRE(phi_n(single, n + 1) / phi_n(single, n) ==
            Approx(std::pow(2 * pi * 4 / g.L, 2)).epsilon(1e-13));

  SpectralField zero(g, 1);
  for (int n = 0; n < 3; ++n) REQUIRE(phi_n(zero, n) == 0.0);

  SpectralField with_mean(g, 1);
  with_mean.at(0, 0, 0) = 2.0;
  REQUIRE_THROWS_AS(phi_n(with_mean, 1), domain_error);
}

TEST_CASE("fn: combination and ordering") {
  REQUIRE(fn(1.0, 0.0, 5.0) == 1.0);
  REQUIRE(fn(0.0, 2.0, 3.0) == 18.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double j = u(rng), p = u(rng), tau = u(rng);
    const double f = fn(j, p, tau);
    REQUIRE(f >= j);
    REQUIRE(f >= tau * tau * p);
  }
  REQUIRE_THROWS_AS(fn(-1.0, 0.0, 1.0), domain_error);
}

TEST_CASE("lambda_f: single-mode forcing") {
  PeriodicGrid g(1, 2 * pi, 32);
  SpectralField k1(g, 1);
  add_cos_mode(k1, 0, 1, 0, 0, 1.0);
  REQUIRE(lambda_f(k1).lambda_f == Approx(1.0).epsilon(1e-12));

  SpectralField k4(g, 1);
  add_cos_mode(k4, 0, 4, 0, 0, 1.0);
  REQUIRE(lambda_f(k4).lambda_f == Approx(0.25).epsilon(1e-12));
}

TEST_CASE("lambda_f: two-mode forcing stabilizes at the highest active mode") {
  PeriodicGrid g(1, 2 * pi, 32);
  SpectralField f(g, 1);
  add_cos_mode(f, 0, 1, 0, 0, 1.0);
  add_cos_mode(f, 0, 3, 0, 0, 1.0);

  // direct ratio oracle: Phi_{n+1}/Phi_n = (1 + 9^{n+1})/(1 + 9^n) -> 9
  auto ratio_at = [](int n) {
    return (1.0 + std::pow(9.0, n + 1)) / (1.0 + std::pow(9.0, n));
  };
  const LambdaF lf = lambda_f(f, 10);
  REQUIRE(1.0 / (lf.lambda_f * lf.lambda_f) == Approx(ratio_at(10)).epsilon(1e-10));
  REQUIRE(1.0 / (lf.lambda_f * lf.lambda_f) == Approx(9.0).epsilon(1e-9));
  REQUIRE(lf.attained_at == 10);  // still climbing toward 9 from below

  SpectralField zero(g, 1);
  REQUIRE_THROWS_AS(lambda_f(zero), degenerate_forcing_error);
}

TEST_CASE("derived_constants: arithmetic") {
  const DerivedConstants c = derived_constants(0.01, 2 * pi, 1.0);
  REQUIRE(c.tau == Approx(3947.8418).epsilon(1e-7));
  REQUIRE(c.lambda_0 == Approx(0.98757).epsilon(1e-5));
  REQUIRE(c.lambda_0 <= 1.0);
  REQUIRE(c.lambda_0 <= c.L);

  const DerivedConstants wide = derived_constants(1.0, 3.0, 1e12);
  REQUIRE(wide.lambda_0 == Approx(3.0).epsilon(1e-10));

  const DerivedConstants unit = derived_constants(1.0, 1.0, 1.0);
  REQUIRE(unit.tau == 1.0);
  REQUIRE(unit.lambda_0 == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-13));

  REQUIRE_THROWS_AS(derived_constants(-1.0, 1.0, 1.0), domain_error);
}

TEST_CASE("long_time_average: constants, oscillation, decay") {
  std::vector<double> constant(1000, 3.25);
  REQUIRE(long_time_average(constant) == Approx(3.25).epsilon(1e-15));

  const int n = 20000;
  const double T = 100 * 2 * pi;
  std::vector<double> osc(n), dec(n);
  for (int i = 0; i < n; ++i) {
    const double t = (i + 1) * T / n;
    osc[i] = std::sin(t);
    dec[i] = std::exp(-t);
  }
  REQUIRE(std::abs(long_time_average(osc)) < 2.0 / (0.8 * T) + 1e-3);
  REQUIRE(std::abs(long_time_average(dec)) < 1.0 / (0.8 * T) * 1.5);

  REQUIRE_THROWS_AS(long_time_average({}), domain_error);
}

TEST_CASE("long_time_average: never exceeds the series maximum") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  std::vector<double> s(500);
  for (auto& v : s) v = u(rng);
  const double lta = long_time_average(s);
  REQUIRE(lta <= *std::max_element(s.begin(), s.end()));
}

TEST_CASE("long_time_average: equals the limit of a convergent running mean") {
  // phi = 2 + 5 (i+1)^{-0.9}: running mean converges to 2 from above
  std::vector<double> s(40000);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = 2.0 + 5.0 * std::pow(i + 1.0, -0.9);
  REQUIRE(long_time_average(s) == Approx(2.0).margin(0.02));
}

TEST_CASE("norm ledger: F combines J with the forcing ladder, stamps increase") {
  NormLedger led;
  led.tau = 2.0;
  led.phi = {1.0, 4.0};
  led.append(0.0, {10.0, 20.0});
  led.append(0.5, {8.0, 16.0});
  REQUIRE(led.samples[0].F[0] == Approx(14.0));
  REQUIRE(led.samples[0].F[1] == Approx(36.0));
  REQUIRE(led.series_F(1)[1] == Approx(32.0));
  REQUIRE_THROWS_AS(led.append(0.5, {1.0, 1.0}), config_error);
}
