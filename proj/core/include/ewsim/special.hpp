#pragma once

#include <cmath>

#include "ewsim/constants.hpp"
#include "ewsim/errors.hpp"

namespace ewsim {

/// Exponential integral E1(x) = int_x^inf exp(-t)/t dt for x > 0.
/// Power series below the crossover, modified Lentz continued fraction above;
/// both branches converge well past 1e-10 relative.
double expint_e1(double x);

/// Bose-Einstein occupation 1/(exp(hbar w / kB T) - 1), overflow-safe.
inline double bose_einstein(double omega, double temperature) {
  require(omega > 0.0, "bose_einstein: omega must be positive");
  require(temperature > 0.0, "bose_einstein: temperature must be positive");
  const double x = constants::hbar * omega / (constants::k_B * temperature);
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

/// coth(hbar w / (2 kB T)), the thermal weight 2 n_th + 1.
inline double thermal_coth(double omega, double temperature) {
  const double x =
      constants::hbar * omega / (2.0 * constants::k_B * temperature);
  if (x > 20.0) return 1.0;
  if (x < 1e-8) return 1.0 / x;  // coth(x) ~ 1/x + x/3
  return 1.0 / std::tanh(x);
}

}  // namespace ewsim
