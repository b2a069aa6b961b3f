#pragma once

#include <cmath>

#include "ewsim/errors.hpp"

namespace ewsim {

/// Flight geometry above the wall plus the grating that produces the
/// diffraction pattern.
struct Geometry {
  double height = 0.0;              // m, electron height above the surface
  double interaction_length = 0.0;  // m, path length over the wall
  double time_of_flight = 0.0;      // s, over the interaction length
  double grating_period = 100e-9;   // m
  double grating_slit_width = 50e-9;  // m
  double grating_to_wall = 3e-3;    // m, free flight from grating to wall

  void validate() const {
    require(height > 0.0, "geometry: height must be positive");
    require(interaction_length > 0.0, "geometry: length must be positive");
    require(time_of_flight > 0.0, "geometry: time of flight must be positive");
  }

  /// Consistency of (L, t, v): t * v == L when all three are supplied.
  bool tof_consistent(double speed, double rel_tol = 1e-9) const {
    const double lhs = time_of_flight * speed;
    return std::abs(lhs - interaction_length) <=
           rel_tol * interaction_length;
  }
};

}  // namespace ewsim
