#pragma once

#include <stdexcept>
#include <string>

namespace crestlab {

/// Invalid scenario/grid/parameter configuration.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Denominator fell below its configured floor.
struct degenerate_field_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Forcing spectrum unusable for length-scale ratios (some Phi_n == 0).
struct degenerate_forcing_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Time step too large for the advective CFL restriction.
struct step_size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solution norm exceeded the blow-up guard.
struct instability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace crestlab
