#pragma once

// Physical constants, SI <-> Gaussian conversion, and the declarative
// descriptions of materials, spheres and applied fields.

#include <optional>
#include <string>
#include <string_view>

#include "zpm/linalg.hpp"

namespace zpm {

/// CODATA 2018 values in both unit systems.
struct PhysicalConstants {
  static constexpr double hbar_si = 1.054571817e-34;     // J s
  static constexpr double hbar_gauss = 1.054571817e-27;  // erg s
  static constexpr double c0_si = 299792458.0;           // m/s
  static constexpr double c0_gauss = 2.99792458e10;      // cm/s
  static constexpr double m_e_si = 9.1093837015e-31;     // kg
  static constexpr double m_e_gauss = 9.1093837015e-28;  // g
  static constexpr double eV_si = 1.602176634e-19;       // J
  static constexpr double eV_gauss = 1.602176634e-12;    // erg
  static constexpr double bohr_radius_si = 5.29177210903e-11;  // m
};

enum class Dimension {
  dimensionless,
  length,
  mass,
  time,
  energy,
  action,
  momentum,
  velocity,
  mass_density,
  wavenumber,
  angular_frequency,
};

struct Quantity {
  double value = 0.0;
  Dimension dim = Dimension::dimensionless;
};

/// Throws Error(invalid_input) for names outside Dimension.
Dimension dimension_from_string(std::string_view name);
std::string_view to_string(Dimension dim);

/// Multiplicative factor taking an SI value of `dim` to Gaussian (cgs).
double si_to_gaussian_factor(Dimension dim);

Quantity to_gaussian(Quantity si);
Quantity to_si(Quantity gaussian);

/// Constitutive scalars of a sphere. mu is fixed to 1.
struct MaterialSpec {
  double epsilon = 1.0;
  double mass_density = 0.0;  // kg/m^3
  /// Dimensionless product g_EM |E| |B| of the magneto-electric coupling.
  std::optional<double> me_coupling;
  /// Prefactor of the Verdet constant V(omega) = V0 omega^2 (Gaussian).
  std::optional<double> verdet_v0;
  /// Rotatory-power pseudo-scalar g.
  std::optional<double> chirality_g;

  void validate() const;
};

/// Parses a material description. Required keys: epsilon and
/// mass_density_kg_m3; optional: me_coupling, verdet_v0, chirality_g.
/// Unknown keys are rejected.
MaterialSpec material_from_json(std::string_view text);
MaterialSpec load_material(const std::string& path);
std::string material_to_json(const MaterialSpec& material);

struct SphereSpec {
  double radius_a = 0.0;  // m
  MaterialSpec material;

  void validate() const;
  double volume() const;  // m^3
  double mass() const;    // kg
};

struct FieldConfig {
  Vec3 E0{};        // Gaussian units
  Vec3 B0{};        // Gaussian units
  Vec3 velocity{};  // m/s

  /// Enforces |v|/c0 < 0.01, the domain where the response is linear in v.
  void validate() const;
};

inline constexpr double kMaxBeta = 0.01;

/// S0 = E0 x B0.
Vec3 s0_vector(const FieldConfig& fields);

}  // namespace zpm
