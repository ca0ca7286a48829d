#pragma once

#include <array>
#include <cmath>

#include "crestlab/errors.hpp"
#include "crestlab/grid.hpp"

namespace crestlab::oracles {

/// Fundamental solution of the time-dependent Stokes problem in the plane:
///   G_ij = e^{-r^2/4 nu t}/(4 pi nu t) (delta_ij - e_i e_j)
///        - (1 - e^{-r^2/4 nu t})/(4 pi r^2) (delta_ij - 2 e_i e_j),
/// r = |x - y|, e = (x - y)/r. The second factor (1 - e^{-rho})/r^2 is
/// evaluated through expm1 so the small-separation limit rho -> 0 stays
/// accurate (it tends to 1/(4 nu t)).
inline std::array<std::array<double, 2>, 2> stokes_green(
    const std::array<double, 2>& x, const std::array<double, 2>& y, double t,
    double nu) {
  if (!(t > 0.0)) throw domain_error("stokes_green: t must be positive");
  if (!(nu > 0.0)) throw domain_error("stokes_green: nu must be positive");
  const double dx = x[0] - y[0];
  const double dy = x[1] - y[1];
  const double r2 = dx * dx + dy * dy;
  if (r2 == 0.0) throw domain_error("stokes_green: x must differ from y");

  const double rho = r2 / (4.0 * nu * t);
  const double gauss = std::exp(-rho) / (4.0 * pi * nu * t);
  // (1 - e^{-rho})/(4 pi r^2) = -expm1(-rho) / (4 pi r^2)
  const double harmonic = -std::expm1(-rho) / (4.0 * pi * r2);

  const double e[2] = {dx / std::sqrt(r2), dy / std::sqrt(r2)};
  std::array<std::array<double, 2>, 2> G;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      const double ee = e[i] * e[j];
      G[i][j] = gauss * (delta - ee) - harmonic * (delta - 2.0 * ee);
    }
  return G;
}

}  // namespace crestlab::oracles
