#pragma once

#include <cmath>

#include "ewsim/constants.hpp"
#include "ewsim/errors.hpp"

namespace ewsim {

/// Electron speed from a flight length and time of flight.
inline double beam_speed_from_tof(double length, double t_tof) {
  require(length > 0.0, "beam_speed_from_tof: length must be positive");
  require(t_tof > 0.0, "beam_speed_from_tof: time of flight must be positive");
  return length / t_tof;
}

/// Non-relativistic de Broglie wavelength h/(m v).
inline double de_broglie_wavelength(double v) {
  require(v > 0.0, "de_broglie_wavelength: speed must be positive");
  require(v < constants::c, "de_broglie_wavelength: speed must be below c");
  return constants::h / (constants::m_e * v);
}

/// Thermal de Broglie wavelength hbar/sqrt(m k_B T).
inline double thermal_wavelength(double temperature) {
  require(temperature > 0.0, "thermal_wavelength: temperature must be positive");
  return constants::hbar /
         std::sqrt(constants::m_e * constants::k_B * temperature);
}

/// Order-one calibration constant for the coherence-length estimate.  Fixed
/// once so the two-slit collimator geometry (12.7 um, 2.0 um, 24 cm at the
/// reference speed) yields a 400 nm transverse coherence length.
inline constexpr double kCoherenceCalibration = 2.580863685;

/// Transverse coherence length from the collimation geometry: the angular
/// divergence theta = (w1 + w2) / (2 D) sets the momentum spread p*theta,
/// and the uncertainty relation turns that into a position spread.
inline double coherence_length(double slit1_width, double slit2_width,
                               double separation, double v,
                               double calibration = kCoherenceCalibration) {
  require(separation > 0.0, "coherence_length: separation must be positive");
  require(slit1_width > 0.0 && slit2_width > 0.0,
          "coherence_length: slit widths must be positive");
  require(v > 0.0 && v < constants::c, "coherence_length: bad speed");
  const double theta = (slit1_width + slit2_width) / (2.0 * separation);
  const double dp = constants::m_e * v * theta;
  return calibration * constants::hbar / dp;
}

/// Beam kinematics and collimation-derived coherence.
struct BeamParameters {
  double speed = 0.0;             // m/s
  double coherence_length = 0.0;  // m, transverse
  double slit1_width = 12.7e-6;   // m
  double slit2_width = 2.0e-6;    // m
  double slit_separation = 0.24;  // m

  double beta() const { return speed / constants::c; }
  double kinetic_energy_ev() const {
    return 0.5 * constants::m_e * speed * speed / constants::e;
  }
  double de_broglie() const { return de_broglie_wavelength(speed); }
  double momentum() const { return constants::m_e * speed; }

  void validate() const {
    require(speed > 0.0 && beta() < 1.0, "beam: need 0 < beta < 1");
    require(coherence_length > 0.0, "beam: coherence length must be positive");
  }
};

}  // namespace ewsim
