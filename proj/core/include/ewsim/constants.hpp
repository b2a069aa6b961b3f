#pragma once

#include <numbers>

namespace ewsim {

/// Physical constants, SI units throughout (CODATA 2018).
struct PhysicalConstants {
  double planck_h = 6.62607015e-34;          // J s
  double hbar = 1.054571817e-34;             // J s
  double elementary_charge = 1.602176634e-19;  // C
  double electron_mass = 9.1093837015e-31;   // kg
  double boltzmann = 1.380649e-23;           // J/K
  double vacuum_permittivity = 8.8541878128e-12;  // F/m
  double light_speed = 299792458.0;          // m/s

  constexpr bool consistent(double rel_tol = 1e-12) const {
    const double ratio = planck_h / (2.0 * std::numbers::pi) / hbar;
    return ratio > 1.0 - rel_tol && ratio < 1.0 + rel_tol && planck_h > 0 &&
           hbar > 0 && elementary_charge > 0 && electron_mass > 0 &&
           boltzmann > 0 && vacuum_permittivity > 0 && light_speed > 0;
  }
};

inline constexpr PhysicalConstants kConst{};

namespace constants {
inline constexpr double h = kConst.planck_h;
inline constexpr double hbar = kConst.hbar;
inline constexpr double e = kConst.elementary_charge;
inline constexpr double m_e = kConst.electron_mass;
inline constexpr double k_B = kConst.boltzmann;
inline constexpr double eps0 = kConst.vacuum_permittivity;
inline constexpr double c = kConst.light_speed;
inline constexpr double pi = std::numbers::pi;
}  // namespace constants

}  // namespace ewsim
