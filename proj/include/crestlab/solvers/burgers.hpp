#pragma once

#include "crestlab/solvers/heat.hpp"

namespace crestlab::solvers {

struct BurgersConfig {
  SpectralField initial;  // odd data on the periodic extension [0, 2 pi]
  double eps_visc = 0.1;
  double T = 1.0;
  double dt = 0.0;        // 0: choose 0.25 min(grid CFL, diffusive bound)
  int sample_every = 1;
};

/// Pseudo-spectral Burgers: u_t = eps u_xx - u u_x, Dirichlet on [0, pi]
/// realized exactly as odd periodic data on [0, 2 pi] (sine Galerkin).
/// Second-order integrating-factor Heun; quadratic term dealiased.
class BurgersSolver {
 public:
  explicit BurgersSolver(const BurgersConfig& cfg) : cfg_(cfg), g_(cfg.initial.grid) {
    if (g_.d != 1) throw config_error("burgers: 1D only");
    if (!(cfg_.eps_visc > 0.0)) throw config_error("burgers: eps must be positive");
    state_ = dealias(cfg_.initial);
    const double ku = g_.k_unit();
    const int kcut = g_.N / 3;
    const double diffusive = 2.0 / (cfg_.eps_visc * ku * ku * kcut * kcut);
    const double u0max = std::max(sup_norm(state_), 1e-6);
    const double cfl = g_.dx() / u0max;
    dt_ = cfg_.dt > 0.0 ? cfg_.dt : 0.25 * std::min(cfl, diffusive);
    if (dt_ > 0.5 * cfl)
      throw step_size_error("burgers: dt violates the advective CFL bound");
  }

  TrajectoryRecord run() {
    TrajectoryRecord rec;
    rec.d = 1;
    rec.L_phys = g_.L / 2.0;  // Dirichlet half-domain
    rec.nu = cfg_.eps_visc;
    rec.dt = dt_;
    rec.sample_dt = dt_ * cfg_.sample_every;
    rec.ledger.tau = rec.L_phys * rec.L_phys / cfg_.eps_visc;  // phi empty: F = J

    const int steps = static_cast<int>(std::ceil(cfg_.T / dt_ - 1e-12));
    const double ku = g_.k_unit();
    std::vector<double> decay(g_.points());
    for_each_mode(g_, [&](std::size_t idx, int k0, int, int) {
      decay[idx] = std::exp(-cfg_.eps_visc * ku * ku * double(k0) * k0 * dt_);
    });

    detail::record_scalar_sample(rec, state_, 0.0, 0.5);
    std::vector<cdouble> n1(g_.points()), n2(g_.points()), stage(g_.points());
    for (int s = 0; s < steps; ++s) {
      auto& a = state_[0];
      nonlinear(a, n1);
      for (std::size_t i = 0; i < a.size(); ++i)
        stage[i] = decay[i] * (a[i] + dt_ * n1[i]);
      nonlinear(stage, n2);
      for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = decay[i] * a[i] + 0.5 * dt_ * (decay[i] * n1[i] + n2[i]);

      if ((s + 1) % cfg_.sample_every == 0 || s + 1 == steps) {
        const double t = (s + 1) * dt_;
        const double umax = detail::record_scalar_sample(rec, state_, t, 0.5);
        if (umax * dt_ / g_.dx() > 0.5)
          throw step_size_error("burgers: advective CFL violated mid-run");
      }
    }
    rec.final_state = state_;
    return rec;
  }

  double dt() const { return dt_; }

 private:
  /// N(u) = -(u^2/2)_x, dealiased.
  void nonlinear(const std::vector<cdouble>& a, std::vector<cdouble>& out) {
    std::vector<cdouble> phys(g_.points());
    fft::synthesis(g_, a.data(), phys.data());
    for (auto& v : phys) v = 0.5 * v.real() * v.real();
    fft::analysis(g_, phys.data(), out.data());
    const double ku = g_.k_unit();
    const int kcut = g_.N / 3;
    for_each_mode(g_, [&](std::size_t idx, int k0, int, int) {
      if (std::abs(k0) > kcut)
        out[idx] = cdouble{0.0, 0.0};
      else
        out[idx] *= cdouble{0.0, -ku * k0};
    });
  }

  BurgersConfig cfg_;
  PeriodicGrid g_;
  SpectralField state_;
  double dt_ = 0.0;
};

inline TrajectoryRecord simulate_burgers(const BurgersConfig& cfg) {
  return BurgersSolver(cfg).run();
}

/// Odd (sine) initial data on the [0, 2 pi] extension from phi0 on [0, pi].
inline SpectralField odd_extension_field(const std::function<double(double)>& phi0, int N) {
  PeriodicGrid g(1, 2 * pi, N);
  return field_from_function(g, 1, [&](int, double x, double, double) {
    return x <= pi ? phi0(x) : -phi0(2 * pi - x);
  });
}

}  // namespace crestlab::solvers
