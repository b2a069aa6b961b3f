#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ewsim/beam.hpp"
#include "ewsim/geometry.hpp"
#include "ewsim/material.hpp"

namespace ewsim {

/// Geometry inputs of the near-field overlap correction C2: the grating-slit
/// Gaussian waist and the propagation distance at which the beam width above
/// the wall is evaluated.  The waists are calibration constants fixed once
/// against the published correction factors.
struct CorrectionGeometry {
  double waist_w0 = 22.5e-9;      // m
  double width_distance = 3e-3;   // m
};

/// Numerical/model knobs with published defaults.
struct ModelSettings {
  double howie_cutoff = 0.6e12;     // rad/s, plasmon frequency cutoff
  double howie_alpha = 1.0 / 8.0;   // wave-vector bound factor alpha
  bool howie_drude = true;          // false: eps = 1 + i sigma/(eps0 w)
  double quad_tol_howie = 1e-4;     // relative
  double quad_tol_scheel = 1e-3;    // relative
};

/// One column of the reference table: wall material, beam, and geometry.
struct Scenario {
  std::string label;
  Material material;
  BeamParameters beam;
  Geometry geometry;
  CorrectionGeometry corrections;
  ModelSettings model;

  void validate() const;
};

/// The five built-in scenarios (reference-table columns).
std::vector<Scenario> builtin_scenarios();
Scenario builtin_scenario(const std::string& label);

/// JSON scenario files use explicit unit suffixes on every numeric key
/// (e.g. "resistivity_ohm_m"); unknown or unit-less keys are rejected.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario_json(const std::string& text);
std::string scenario_to_json(const Scenario& s);

}  // namespace ewsim
