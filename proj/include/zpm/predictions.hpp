#pragma once

// Physical predictions built on the second-order Born result
// m v = eta (hbar/a)(eps - 1) epsilon_inm chi_mn, the first-order Born term,
// and the cutoff-regularized momentum density used for comparison.
//
// Inputs and outputs are SI. Each Prediction carries a digest of every number
// it was computed from, so replay() can recompute it.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zpm/linalg.hpp"
#include "zpm/tensor_assembly.hpp"
#include "zpm/units.hpp"

namespace zpm {

enum class Model { me_sphere, moving_sphere, magneto_chiral, feigel_cutoff, first_born };
std::string_view to_string(Model model);

struct DigestEntry {
  std::string name;
  double value = 0.0;
  std::string source;
};

struct Prediction {
  Model model = Model::first_born;
  /// Kinematic momentum m v for the ME and magneto-chiral spheres, radiative
  /// momentum P_rad for the moving sphere, momentum density (kg/(m^2 s)) for
  /// the cutoff and first-Born models. kg m/s otherwise.
  Vec3 momentum{};
  Vec3 velocity{};           // m/s
  double mass_shift = 0.0;   // kg, zero unless model is moving_sphere
  std::vector<DigestEntry> inputs_digest;
  std::vector<std::string> warnings;
  bool macroscopic_model_probably_wrong = false;

  /// Throws Error(invalid_input) if `name` is absent.
  double digest_value(std::string_view name) const;
};

enum class BornMode { dimensional, cutoff };

/// First-order Born momentum. Dimensional regularization gives exactly zero;
/// a hard cutoff k_cut (1/m) gives the momentum density
/// (1/mu + eps)/(32 pi^3) hbar k_cut^4 chiS0 with chiS0_i = epsilon_ijk chi_jk / 2,
/// and velocity = density / rho.
Prediction first_born(const SphereSpec& sphere, const ChiTensor& chi, BornMode mode,
                      std::optional<double> k_cut = std::nullopt, double mu = 1.0);

/// First-order Born with a cutoff wavelength and a magneto-electric chi built
/// from the material's me_coupling along E0 x B0.
Prediction feigel_cutoff(const SphereSpec& sphere, const FieldConfig& fields,
                         double cutoff_wavelength, double mu = 1.0);

/// Same with an explicit chi S0 magnitude along E0 x B0.
Prediction feigel_cutoff(double chi_s0, double epsilon, double mass_density,
                         double cutoff_wavelength, const Vec3& direction,
                         double mu = 1.0);

/// m v = eta (hbar/a)(eps-1) epsilon_inm chi_mn with chi_nm = g (E_n B_m - E_m B_n)
/// and g |E0| |B0| = material.me_coupling.
Prediction me_sphere_velocity(const SphereSpec& sphere, const FieldConfig& fields,
                              const ConstantSet& constants);

/// P_rad = -2 eta (hbar / (a c0)) (eps-1)^2 v; mass_shift is its coefficient.
Prediction moving_sphere(const SphereSpec& sphere, const Vec3& v,
                         const ConstantSet& constants);

/// p = -0.005098 hbar V0 c0^2 g / a^3 B evaluated in Gaussian units with B in
/// gauss, then returned in SI. Always flagged probably wrong.
Prediction magneto_chiral(const SphereSpec& sphere, const Vec3& B);

inline constexpr double kMagnetoChiralCoefficient = -0.005098;

/// Zero-point momentum of the empty vacuum under dimensional regularization.
Vec3 empty_vacuum_momentum();

/// hbar sum_k k w(|k|) over the cubic grid {-n..n}^3 * dk with w = exp(-|k|^2).
/// Cancels pairwise; used to check the symmetric-sum argument numerically.
Vec3 empty_vacuum_grid_sum(int n, double dk);

/// Recomputes a prediction from its digest alone.
Prediction replay(const Prediction& p);

}  // namespace zpm
