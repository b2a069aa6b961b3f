#pragma once

#include <cmath>
#include <string>

#include "ewsim/constants.hpp"
#include "ewsim/errors.hpp"

namespace ewsim {

/// Wall substance seen by the passing electron.
struct Material {
  std::string name;
  double resistivity = 0.0;          // Ohm m
  double temperature = 300.0;        // K
  double effective_mass_ratio = 1.0; // m*/m
  double carrier_density = 0.0;      // 1/m^3

  double conductivity() const { return 1.0 / resistivity; }

  /// Drude plasma frequency, omega_p = sqrt(N e^2 / (eps0 m*)).
  double plasma_frequency() const {
    using namespace constants;
    return std::sqrt(carrier_density * e * e /
                     (eps0 * effective_mass_ratio * m_e));
  }

  /// Drude damping rate, gamma = N e^2 rho / m*.
  double drude_damping() const {
    using namespace constants;
    return carrier_density * e * e * resistivity /
           (effective_mass_ratio * m_e);
  }

  void validate() const {
    require(resistivity > 0.0, "material: resistivity must be positive");
    require(temperature > 0.0, "material: temperature must be positive");
    require(effective_mass_ratio > 0.0 && effective_mass_ratio <= 1.1,
            "material: effective mass ratio outside (0, 1.1]");
    require(carrier_density >= 0.0, "material: carrier density negative");
    const double closure = conductivity() * resistivity;
    require(std::abs(closure - 1.0) < 1e-12,
            "material: sigma * rho != 1");
  }
};

}  // namespace ewsim
