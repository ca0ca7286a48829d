#pragma once

#include <vector>

#include "crestlab/crest.hpp"
#include "crestlab/ledger.hpp"

namespace crestlab::solvers {

/// Everything a solver emits along one trajectory: the seminorm ladder,
/// crest-factor series, and the pointwise norms the inequality checks need.
struct TrajectoryRecord {
  NormLedger ledger;
  CrestSeries crest_bounded;
  CrestSeries crest_forced;       // populated only for forced runs
  std::vector<double> du_inf;     // max_{i,j} |du_i/dx_j| at ledger times
  std::vector<double> du_l2_sq;   // J_1 alias kept for dissipation diagnostics
  std::vector<double> omega_inf;  // 2D NSE only
  std::vector<double> omega_l2;   // 2D NSE only

  // run metadata
  double L_phys = 2 * pi;  // physical domain length (half the grid for odd extensions)
  int d = 1;
  double nu = 0.0;  // diffusivity (nu, k or eps depending on the equation)
  double dt = 0.0;  // time step actually used
  double sample_dt = 0.0;
  SpectralField final_state;

  std::vector<double> times() const { return ledger.series_t(); }
};

struct ResidualReport {
  std::vector<double> slack;  // one per interior ledger sample
  double min_slack = 0.0;
  double max_f1_dotdot = 0.0;  // |F1''| estimate for the discretization budget
};

/// Slack of (1/2) dF1/dt <= -nu F2 + nu tau^2 Phi2 + 3 ||Du||_inf F1 + F1/tau
/// with the derivative by centered differences. Positive slack means the
/// inequality holds with margin at that sample.
inline ResidualReport inequality_residuals(const TrajectoryRecord& rec, double tau) {
  const auto& samples = rec.ledger.samples;
  if (samples.size() < 3)
    throw domain_error("inequality_residuals: need at least 3 ledger samples");
  if (rec.du_inf.size() != samples.size())
    throw domain_error("inequality_residuals: missing ||Du||_inf series");
  const double phi2 = rec.ledger.phi.size() > 2 ? rec.ledger.phi[2] : 0.0;
  ResidualReport out;
  out.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double dt2 = samples[i + 1].t - samples[i - 1].t;
    const double f1dot = (samples[i + 1].F.at(1) - samples[i - 1].F.at(1)) / dt2;
    const double rhs = -rec.nu * samples[i].F.at(2) + rec.nu * tau * tau * phi2 +
                       3.0 * rec.du_inf[i] * samples[i].F.at(1) +
                       samples[i].F.at(1) / tau;
    const double slack = rhs - 0.5 * f1dot;
    out.slack.push_back(slack);
    out.min_slack = std::min(out.min_slack, slack);

    const double h = samples[i + 1].t - samples[i].t;
    const double f1dd = (samples[i + 1].F.at(1) - 2.0 * samples[i].F.at(1) +
                         samples[i - 1].F.at(1)) /
                        (h * h);
    out.max_f1_dotdot = std::max(out.max_f1_dotdot, std::abs(f1dd));
  }
  return out;
}

}  // namespace crestlab::solvers
