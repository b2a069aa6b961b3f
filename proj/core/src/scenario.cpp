#include "ewsim/scenario.hpp"

#include <fstream>
#include <sstream>

#include "ewsim/errors.hpp"
#include "json.hpp"

namespace ewsim {

using nlohmann::json;

void Scenario::validate() const {
  material.validate();
  beam.validate();
  geometry.validate();
  require(corrections.waist_w0 > 0.0, "scenario: waist must be positive");
  require(corrections.width_distance >= 0.0,
          "scenario: width distance must be non-negative");
  require(model.howie_cutoff > 0.0 && model.howie_alpha > 0.0,
          "scenario: Howie knobs must be positive");
  if (!geometry.tof_consistent(beam.speed))
    throw DomainError("scenario '" + label + "': speed * tof != length");
}

namespace {

Scenario make(const std::string& label, const std::string& name, double rho,
              double mass_ratio, double carrier_density, double height,
              double length, double tof, double w0, double width_dist) {
  Scenario s;
  s.label = label;
  s.material = Material{name, rho, 300.0, mass_ratio, carrier_density};
  s.beam.speed = length / tof;
  s.beam.coherence_length = 400e-9;
  s.geometry.height = height;
  s.geometry.interaction_length = length;
  s.geometry.time_of_flight = tof;
  s.geometry.grating_to_wall = width_dist;
  s.corrections.waist_w0 = w0;
  s.corrections.width_distance = width_dist;
  return s;
}

// Carrier densities back out of sigma = N e mu with the bulk mobilities
// (holes for illuminated GaAs, electrons for dark GaAs and silicon); gold
// uses the standard conduction-electron density.
const std::vector<Scenario>& presets() {
  static const std::vector<Scenario> v = {
      make("gaas-illuminated", "GaAs (illuminated)", 5.0, 0.34, 4.1610e19,
           6e-6, 0.01, 4.1e-10, 22.5e-9, 3e-3),
      make("gaas-dark", "GaAs (dark)", 2.5e6, 0.067, 3.1208e12, 6e-6, 0.01,
           4.1e-10, 22.5e-9, 3e-3),
      make("gold-channel", "Gold channel (15 nm film)", 19e-8, 1.0, 5.90e28,
           0.85e-6, 1.5e-3, 6.2e-11, 50.8e-9, 5e-3),
      make("silicon", "Silicon", 1.5e-2, 0.26, 2.9722e21, 1.7e-6, 0.01,
           4.1e-10, 22.5e-9, 3e-3),
      make("gold", "Gold", 2.4e-8, 1.0, 5.90e28, 1.7e-6, 0.01, 4.1e-10,
           22.5e-9, 3e-3),
  };
  return v;
}

/// Strict object reader: every key must be consumed exactly once, and every
/// numeric key must end in a unit suffix.
class StrictObject {
 public:
  StrictObject(const json& j, std::string where)
      : obj_(j), where_(std::move(where)) {
    if (!j.is_object()) throw ConfigError(where_ + ": expected an object");
  }

  double number(const std::string& key) {
    check_unit_suffix(key);
    return fetch(key).get<double>();
  }
  double number_or(const std::string& key, double fallback) {
    if (!obj_.contains(key)) return fallback;
    return number(key);
  }
  std::string text(const std::string& key, const std::string& fallback) {
    if (!obj_.contains(key)) return fallback;
    return fetch(key).get<std::string>();
  }
  bool flag(const std::string& key, bool fallback) {
    if (!obj_.contains(key)) return fallback;
    return fetch(key).get<bool>();
  }
  std::optional<StrictObject> child(const std::string& key) {
    if (!obj_.contains(key)) return std::nullopt;
    seen_.push_back(key);
    return StrictObject(obj_.at(key), where_ + "." + key);
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      bool used = false;
      for (const auto& k : seen_)
        if (k == it.key()) { used = true; break; }
      if (!used)
        throw ConfigError(where_ + ": unknown key '" + it.key() + "'");
    }
  }

 private:
  const json& fetch(const std::string& key) {
    if (!obj_.contains(key))
      throw ConfigError(where_ + ": missing key '" + key + "'");
    seen_.push_back(key);
    return obj_.at(key);
  }

  void check_unit_suffix(const std::string& key) const {
    static const char* suffixes[] = {
        "_m",   "_s",     "_k",        "_ev",     "_ohm_m", "_per_m3",
        "_m_per_s", "_rad_per_s", "_ratio", "_hz", "_per_m2_s", "_m2",
        "_m3_per_s", "_per_s", "_m2_per_s", "_m2_per_v_s", "_v_per_m"};
    for (const char* suf : suffixes) {
      const std::string s = suf;
      if (key.size() > s.size() &&
          key.compare(key.size() - s.size(), s.size(), s) == 0)
        return;
    }
    throw ConfigError(where_ + ": numeric key '" + key +
                      "' lacks a unit suffix (use _m, _s, _k, _ev, _ohm_m, "
                      "_ratio, ...)");
  }

  const json& obj_;
  std::string where_;
  std::vector<std::string> seen_;
};

}  // namespace

std::vector<Scenario> builtin_scenarios() { return presets(); }

Scenario builtin_scenario(const std::string& label) {
  for (const auto& s : presets())
    if (s.label == label) return s;
  throw ConfigError("unknown built-in scenario '" + label + "'");
}

Scenario parse_scenario_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("scenario: invalid JSON: ") + ex.what());
  }
  StrictObject root(j, "scenario");
  Scenario s;
  if (j.contains("preset_label")) {
    // start from a built-in column, then apply overrides
    s = builtin_scenario(root.text("preset_label", ""));
  }
  s.label = root.text("label", s.label);

  if (auto m = root.child("material")) {
    s.material.name = m->text("name", s.material.name);
    s.material.resistivity = m->number_or("resistivity_ohm_m", s.material.resistivity);
    s.material.temperature = m->number_or("temperature_k", s.material.temperature);
    s.material.effective_mass_ratio =
        m->number_or("effective_mass_ratio", s.material.effective_mass_ratio);
    s.material.carrier_density =
        m->number_or("carrier_density_per_m3", s.material.carrier_density);
    m->finish();
  }
  if (auto b = root.child("beam")) {
    s.beam.speed = b->number_or("speed_m_per_s", s.beam.speed);
    s.beam.coherence_length =
        b->number_or("coherence_length_m", s.beam.coherence_length);
    s.beam.slit1_width = b->number_or("slit1_width_m", s.beam.slit1_width);
    s.beam.slit2_width = b->number_or("slit2_width_m", s.beam.slit2_width);
    s.beam.slit_separation =
        b->number_or("slit_separation_m", s.beam.slit_separation);
    b->finish();
  }
  if (auto g = root.child("geometry")) {
    s.geometry.height = g->number_or("height_m", s.geometry.height);
    s.geometry.interaction_length =
        g->number_or("interaction_length_m", s.geometry.interaction_length);
    s.geometry.time_of_flight =
        g->number_or("time_of_flight_s", s.geometry.time_of_flight);
    s.geometry.grating_period =
        g->number_or("grating_period_m", s.geometry.grating_period);
    s.geometry.grating_slit_width =
        g->number_or("grating_slit_width_m", s.geometry.grating_slit_width);
    s.geometry.grating_to_wall =
        g->number_or("grating_to_wall_m", s.geometry.grating_to_wall);
    g->finish();
  }
  if (auto c = root.child("corrections")) {
    s.corrections.waist_w0 = c->number_or("waist_w0_m", s.corrections.waist_w0);
    s.corrections.width_distance =
        c->number_or("width_distance_m", s.corrections.width_distance);
    c->finish();
  }
  if (auto m = root.child("model")) {
    s.model.howie_cutoff =
        m->number_or("howie_cutoff_rad_per_s", s.model.howie_cutoff);
    s.model.howie_alpha = m->number_or("howie_alpha_ratio", s.model.howie_alpha);
    const std::string form =
        m->text("howie_dielectric", s.model.howie_drude ? "drude" : "conductivity");
    if (form != "drude" && form != "conductivity")
      throw ConfigError("scenario.model: howie_dielectric must be 'drude' or "
                        "'conductivity'");
    s.model.howie_drude = (form == "drude");
    s.model.quad_tol_howie =
        m->number_or("quad_tol_howie_ratio", s.model.quad_tol_howie);
    s.model.quad_tol_scheel =
        m->number_or("quad_tol_scheel_ratio", s.model.quad_tol_scheel);
    m->finish();
  }
  root.finish();
  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_json(ss.str());
}

std::string scenario_to_json(const Scenario& s) {
  json j;
  j["label"] = s.label;
  j["material"] = {{"name", s.material.name},
                   {"resistivity_ohm_m", s.material.resistivity},
                   {"temperature_k", s.material.temperature},
                   {"effective_mass_ratio", s.material.effective_mass_ratio},
                   {"carrier_density_per_m3", s.material.carrier_density}};
  j["beam"] = {{"speed_m_per_s", s.beam.speed},
               {"coherence_length_m", s.beam.coherence_length},
               {"slit1_width_m", s.beam.slit1_width},
               {"slit2_width_m", s.beam.slit2_width},
               {"slit_separation_m", s.beam.slit_separation}};
  j["geometry"] = {{"height_m", s.geometry.height},
                   {"interaction_length_m", s.geometry.interaction_length},
                   {"time_of_flight_s", s.geometry.time_of_flight},
                   {"grating_period_m", s.geometry.grating_period},
                   {"grating_slit_width_m", s.geometry.grating_slit_width},
                   {"grating_to_wall_m", s.geometry.grating_to_wall}};
  j["corrections"] = {{"waist_w0_m", s.corrections.waist_w0},
                      {"width_distance_m", s.corrections.width_distance}};
  j["model"] = {{"howie_cutoff_rad_per_s", s.model.howie_cutoff},
                {"howie_alpha_ratio", s.model.howie_alpha},
                {"howie_dielectric",
                 s.model.howie_drude ? "drude" : "conductivity"},
                {"quad_tol_howie_ratio", s.model.quad_tol_howie},
                {"quad_tol_scheel_ratio", s.model.quad_tol_scheel}};
  return j.dump(2);
}

}  // namespace ewsim
