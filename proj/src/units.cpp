#include "zpm/units.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zpm/error.hpp"

namespace zpm {

namespace {

struct DimensionInfo {
  Dimension dim;
  std::string_view name;
  double si_to_gaussian;
};

// cm = 1e2 m, g = 1e-3 kg, erg = 1e-7 J.
constexpr DimensionInfo kDimensions[] = {
    {Dimension::dimensionless, "dimensionless", 1.0},
    {Dimension::length, "length", 1e2},
    {Dimension::mass, "mass", 1e3},
    {Dimension::time, "time", 1.0},
    {Dimension::energy, "energy", 1e7},
    {Dimension::action, "action", 1e7},
    {Dimension::momentum, "momentum", 1e5},
    {Dimension::velocity, "velocity", 1e2},
    {Dimension::mass_density, "mass_density", 1e-3},
    {Dimension::wavenumber, "wavenumber", 1e-2},
    {Dimension::angular_frequency, "angular_frequency", 1.0},
};

const DimensionInfo& info(Dimension dim) {
  for (const auto& d : kDimensions)
    if (d.dim == dim) return d;
  fail(ErrorKind::invalid_input,
       "unknown dimension tag " + std::to_string(static_cast<int>(dim)));
}

}  // namespace

Dimension dimension_from_string(std::string_view name) {
  for (const auto& d : kDimensions)
    if (d.name == name) return d.dim;
  fail(ErrorKind::invalid_input,
       "unknown dimension '" + std::string(name) + "'");
}

std::string_view to_string(Dimension dim) { return info(dim).name; }

double si_to_gaussian_factor(Dimension dim) {
  return info(dim).si_to_gaussian;
}

Quantity to_gaussian(Quantity si) {
  return {si.value * si_to_gaussian_factor(si.dim), si.dim};
}

Quantity to_si(Quantity gaussian) {
  return {gaussian.value / si_to_gaussian_factor(gaussian.dim), gaussian.dim};
}

void MaterialSpec::validate() const {
  if (!std::isfinite(epsilon) || epsilon < 1.0)
    fail(ErrorKind::invalid_input, "epsilon must be real and >= 1");
  if (!std::isfinite(mass_density) || mass_density <= 0.0)
    fail(ErrorKind::invalid_input, "mass_density must be > 0");
  for (const auto* opt : {&me_coupling, &verdet_v0, &chirality_g})
    if (opt->has_value() && !std::isfinite(**opt))
      fail(ErrorKind::invalid_input, "material coefficients must be finite");
}

MaterialSpec material_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::invalid_input, std::string("material JSON: ") + e.what());
  }
  if (!j.is_object())
    fail(ErrorKind::invalid_input, "material JSON must be an object");

  MaterialSpec m;
  bool have_eps = false;
  bool have_rho = false;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number())
      fail(ErrorKind::invalid_input, "material key '" + key + "' must be a number");
    const double v = value.get<double>();
    if (key == "epsilon") {
      m.epsilon = v;
      have_eps = true;
    } else if (key == "mass_density_kg_m3") {
      m.mass_density = v;
      have_rho = true;
    } else if (key == "me_coupling") {
      m.me_coupling = v;
    } else if (key == "verdet_v0") {
      m.verdet_v0 = v;
    } else if (key == "chirality_g") {
      m.chirality_g = v;
    } else {
      fail(ErrorKind::invalid_input, "unknown material key '" + key + "'");
    }
  }
  if (!have_eps || !have_rho)
    fail(ErrorKind::invalid_input,
         "material requires epsilon and mass_density_kg_m3");
  m.validate();
  return m;
}

MaterialSpec load_material(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io, "cannot open material file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return material_from_json(ss.str());
}

std::string material_to_json(const MaterialSpec& m) {
  nlohmann::json j;
  j["epsilon"] = m.epsilon;
  j["mass_density_kg_m3"] = m.mass_density;
  if (m.me_coupling) j["me_coupling"] = *m.me_coupling;
  if (m.verdet_v0) j["verdet_v0"] = *m.verdet_v0;
  if (m.chirality_g) j["chirality_g"] = *m.chirality_g;
  return j.dump();
}

void SphereSpec::validate() const {
  if (!std::isfinite(radius_a) || radius_a <= 0.0)
    fail(ErrorKind::invalid_input, "sphere radius must be > 0");
  material.validate();
}

double SphereSpec::volume() const {
  return 4.0 * M_PI * radius_a * radius_a * radius_a / 3.0;
}

double SphereSpec::mass() const { return material.mass_density * volume(); }

void FieldConfig::validate() const {
  for (const auto* v : {&E0, &B0, &velocity})
    for (double x : *v)
      if (!std::isfinite(x))
        fail(ErrorKind::invalid_input, "field components must be finite");
  if (norm(velocity) / PhysicalConstants::c0_si >= kMaxBeta)
    fail(ErrorKind::domain, "|v|/c0 must be below 0.01");
}

Vec3 s0_vector(const FieldConfig& fields) {
  return cross(fields.E0, fields.B0);
}

}  // namespace zpm
