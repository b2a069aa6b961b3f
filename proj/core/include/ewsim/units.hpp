#pragma once

#include <charconv>
#include <string>

#include "ewsim/constants.hpp"

namespace ewsim::units {

// SI is used internally everywhere.  These helpers live at the interface,
// where electron-volts, microns and ohm-centimeters are the natural currency.

inline constexpr double ev_to_joule(double ev) { return ev * constants::e; }
inline constexpr double joule_to_ev(double j) { return j / constants::e; }

inline constexpr double micron_to_meter(double um) { return um * 1e-6; }
inline constexpr double meter_to_micron(double m) { return m * 1e6; }

inline constexpr double nm_to_meter(double nm) { return nm * 1e-9; }

inline constexpr double ohm_cm_to_ohm_m(double ohm_cm) { return ohm_cm * 1e-2; }
inline constexpr double ohm_m_to_ohm_cm(double ohm_m) { return ohm_m * 1e2; }

inline constexpr double cm2_to_m2(double cm2) { return cm2 * 1e-4; }
inline constexpr double per_cm3_to_per_m3(double v) { return v * 1e6; }

/// Shortest round-trip decimal representation.  All CSV/JSON writers go
/// through this so identical runs produce byte-identical files.
inline std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

/// Two-significant-figure rendering used by the table views (matches the
/// precision of the published reference values).
std::string format_sig2(double v);

}  // namespace ewsim::units
