#include "zpm/predictions.hpp"

#include <cmath>
#include <sstream>

#include "zpm/error.hpp"

namespace zpm {

namespace {

using PC = PhysicalConstants;

constexpr const char* kAxes = "xyz";

void add(Prediction& p, std::string name, double value, std::string source = "input") {
  p.inputs_digest.push_back({std::move(name), value, std::move(source)});
}

void add_vec(Prediction& p, const std::string& name, const Vec3& v) {
  for (int i = 0; i < 3; ++i) add(p, name + "_" + kAxes[i], v[i]);
}

Vec3 digest_vec(const Prediction& p, const std::string& name) {
  Vec3 v{};
  for (int i = 0; i < 3; ++i) v[i] = p.digest_value(name + "_" + kAxes[i]);
  return v;
}

void add_sphere(Prediction& p, const SphereSpec& s) {
  add(p, "radius_m", s.radius_a);
  add(p, "epsilon", s.material.epsilon);
  add(p, "mass_density_kg_m3", s.material.mass_density);
}

SphereSpec digest_sphere(const Prediction& p) {
  SphereSpec s;
  s.radius_a = p.digest_value("radius_m");
  s.material.epsilon = p.digest_value("epsilon");
  s.material.mass_density = p.digest_value("mass_density_kg_m3");
  return s;
}

void add_constants(Prediction& p, const ConstantSet& c) {
  add(p, "I0", c.I0, "constants");
  add(p, "I1", c.I1, "constants");
  add(p, "A", c.A, "constants");
  add(p, "C", c.C, "constants");
  add(p, "D", c.D, "constants");
  add(p, "E", c.E, "constants");
  add(p, "eta", eta(c), "derived");
}

ConstantSet digest_constants(const Prediction& p) {
  ConstantSet c;
  c.I0 = p.digest_value("I0");
  c.I1 = p.digest_value("I1");
  c.A = p.digest_value("A");
  c.C = p.digest_value("C");
  c.D = p.digest_value("D");
  c.E = p.digest_value("E");
  return c;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void warn_perturbative(Prediction& p, double epsilon) {
  if (std::fabs(epsilon - 1.0) > kMaxPerturbativeContrast)
    p.warnings.push_back("eps - 1 = " + fmt(epsilon - 1.0) +
                         " is outside the second-order Born range |eps - 1| <= 0.5; "
                         "the closed form is extrapolated");
}

double momentum_to_si(double gaussian) {
  return to_si({gaussian, Dimension::momentum}).value;
}

}  // namespace

std::string_view to_string(Model model) {
  switch (model) {
    case Model::me_sphere: return "me_sphere";
    case Model::moving_sphere: return "moving_sphere";
    case Model::magneto_chiral: return "magneto_chiral";
    case Model::feigel_cutoff: return "feigel_cutoff";
    case Model::first_born: return "first_born";
  }
  return "unknown";
}

double Prediction::digest_value(std::string_view name) const {
  for (const auto& e : inputs_digest)
    if (e.name == name) return e.value;
  fail(ErrorKind::invalid_input, "digest has no entry '" + std::string(name) + "'");
}

Prediction first_born(const SphereSpec& sphere, const ChiTensor& chi, BornMode mode,
                      std::optional<double> k_cut, double mu) {
  sphere.validate();
  if (!(mu > 0.0)) fail(ErrorKind::invalid_input, "mu must be positive");
  Prediction p;
  p.model = Model::first_born;
  add_sphere(p, sphere);
  add(p, "mu", mu);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      add(p, std::string("chi_") + kAxes[i] + kAxes[j], chi(i, j));
  add(p, "cutoff_mode", mode == BornMode::cutoff ? 1.0 : 0.0);
  if (mode == BornMode::dimensional) {
    add(p, "k_cut_per_m", 0.0);
    return p;
  }
  if (!k_cut || !(*k_cut > 0.0) || !std::isfinite(*k_cut))
    fail(ErrorKind::invalid_input, "cutoff mode needs k_cut > 0");
  add(p, "k_cut_per_m", *k_cut);
  // chiS0_i = epsilon_ijk chi_jk / 2
  Vec3 s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s[i] += 0.5 * levi_civita(i, j, k) * chi(j, k);
  const double pre = (1.0 / mu + sphere.material.epsilon) / (32.0 * std::pow(M_PI, 3)) *
                     PC::hbar_si * std::pow(*k_cut, 4);
  p.momentum = pre * s;
  p.velocity = (1.0 / sphere.material.mass_density) * p.momentum;
  return p;
}

Prediction feigel_cutoff(double chi_s0, double epsilon, double mass_density,
                         double cutoff_wavelength, const Vec3& direction, double mu) {
  if (!(cutoff_wavelength > 0.0))
    fail(ErrorKind::invalid_input, "cutoff wavelength must be positive");
  const double n = norm(direction);
  if (!(n > 0.0)) fail(ErrorKind::invalid_input, "direction must be nonzero");
  SphereSpec sphere;
  sphere.radius_a = 1.0;  // the density does not depend on the size
  sphere.material.epsilon = epsilon;
  sphere.material.mass_density = mass_density;
  // antisymmetric chi with epsilon_ijk chi_jk / 2 = chi_s0 * direction / |direction|
  const ChiTensor chi = ChiTensor::general(skew((chi_s0 / n) * direction));
  Prediction p = first_born(sphere, chi, BornMode::cutoff, 2.0 * M_PI / cutoff_wavelength, mu);
  p.model = Model::feigel_cutoff;
  p.inputs_digest.clear();
  add(p, "chi_s0", chi_s0);
  add(p, "epsilon", epsilon);
  add(p, "mass_density_kg_m3", mass_density);
  add(p, "cutoff_wavelength_m", cutoff_wavelength);
  add(p, "mu", mu);
  add_vec(p, "direction", direction);
  return p;
}

Prediction feigel_cutoff(const SphereSpec& sphere, const FieldConfig& fields,
                         double cutoff_wavelength, double mu) {
  sphere.validate();
  fields.validate();
  if (!sphere.material.me_coupling)
    fail(ErrorKind::invalid_input, "material has no me_coupling");
  Vec3 dir = s0_vector(fields);
  const double chi_s0 = norm(dir) > 0.0 ? *sphere.material.me_coupling : 0.0;
  if (!(norm(dir) > 0.0)) dir = {0.0, 0.0, 1.0};
  return feigel_cutoff(chi_s0, sphere.material.epsilon, sphere.material.mass_density,
                       cutoff_wavelength, dir, mu);
}

Prediction me_sphere_velocity(const SphereSpec& sphere, const FieldConfig& fields,
                              const ConstantSet& constants) {
  sphere.validate();
  fields.validate();
  if (!sphere.material.me_coupling)
    fail(ErrorKind::invalid_input, "material has no me_coupling");
  Prediction p;
  p.model = Model::me_sphere;
  add_sphere(p, sphere);
  add(p, "me_coupling", *sphere.material.me_coupling);
  add_vec(p, "E0", fields.E0);
  add_vec(p, "B0", fields.B0);
  add_constants(p, constants);

  const double eb = norm(fields.E0) * norm(fields.B0);
  const double g = eb > 0.0 ? *sphere.material.me_coupling / eb : 0.0;
  const ChiTensor chi = ChiTensor::magneto_electric(g, fields.E0, fields.B0);
  const double eta_value = eta(constants);

  const double a_cm = to_gaussian({sphere.radius_a, Dimension::length}).value;
  const Vec3 mv_gauss = born_kinematic_momentum(a_cm, sphere.material.epsilon, chi,
                                                eta_value, PC::hbar_gauss);
  for (int i = 0; i < 3; ++i) p.momentum[i] = momentum_to_si(mv_gauss[i]);
  p.velocity = (1.0 / sphere.mass()) * p.momentum;

  warn_perturbative(p, sphere.material.epsilon);
  p.warnings.push_back(
      "sign: the general contraction gives m v = -2 eta (hbar/a)(eps-1) g E x B, the "
      "specialized printed formula has +2 eta; with eta = " + fmt(eta_value) +
      (eta_value < 0.0 ? " both point along +E x B" : " they point opposite"));
  return p;
}

Prediction moving_sphere(const SphereSpec& sphere, const Vec3& v,
                         const ConstantSet& constants) {
  sphere.validate();
  if (norm(v) / PC::c0_si >= kMaxBeta)
    fail(ErrorKind::domain, "moving sphere requires |v|/c0 < 0.01");
  Prediction p;
  p.model = Model::moving_sphere;
  add_sphere(p, sphere);
  add_vec(p, "velocity", v);
  add_constants(p, constants);

  const double eta_value = eta(constants);
  const double a_cm = to_gaussian({sphere.radius_a, Dimension::length}).value;
  const double em1 = sphere.material.epsilon - 1.0;
  // P_rad = -m v from the contraction with chi = (1 - eps) skew(v / c0).
  const ChiTensor chi = ChiTensor::moving_medium(sphere.material.epsilon,
                                                 (1.0 / PC::c0_si) * v);
  const Vec3 mv_gauss = born_kinematic_momentum(a_cm, sphere.material.epsilon, chi,
                                                eta_value, PC::hbar_gauss);
  for (int i = 0; i < 3; ++i) p.momentum[i] = -momentum_to_si(mv_gauss[i]);
  p.velocity = v;
  const double shift_gauss = -2.0 * eta_value * PC::hbar_gauss / (a_cm * PC::c0_gauss) * em1 * em1;
  p.mass_shift = to_si({shift_gauss, Dimension::mass}).value;

  warn_perturbative(p, sphere.material.epsilon);
  if (p.mass_shift > 0.0)
    p.warnings.push_back("the computed eta is negative, so P_rad is parallel to v and the "
                         "mass shift is positive (heavier), opposite to a mass reduction");
  return p;
}

Prediction magneto_chiral(const SphereSpec& sphere, const Vec3& B) {
  sphere.validate();
  const auto& m = sphere.material;
  if (!m.verdet_v0 || !m.chirality_g)
    fail(ErrorKind::invalid_input, "magneto-chiral model needs verdet_v0 and chirality_g");
  Prediction p;
  p.model = Model::magneto_chiral;
  p.macroscopic_model_probably_wrong = true;
  add_sphere(p, sphere);
  add(p, "verdet_v0", *m.verdet_v0);
  add(p, "chirality_g", *m.chirality_g);
  add_vec(p, "B_gauss", B);
  add(p, "coefficient", kMagnetoChiralCoefficient, "published");

  const double a_cm = to_gaussian({sphere.radius_a, Dimension::length}).value;
  const double pre = kMagnetoChiralCoefficient * PC::hbar_gauss * *m.verdet_v0 *
                     PC::c0_gauss * PC::c0_gauss * *m.chirality_g / (a_cm * a_cm * a_cm);
  for (int i = 0; i < 3; ++i) p.momentum[i] = momentum_to_si(pre * B[i]);
  p.velocity = (1.0 / sphere.mass()) * p.momentum;
  p.warnings.push_back(
      "macroscopic magneto-chiral model: the regularized result is probably wrong; the "
      "microscopic treatment gives exactly zero");
  p.warnings.push_back("V0 units are unspecified; hbar V0 c0^2 g B / a^3 is taken as a "
                       "Gaussian momentum");
  return p;
}

Vec3 empty_vacuum_momentum() { return {0.0, 0.0, 0.0}; }

Vec3 empty_vacuum_grid_sum(int n, double dk) {
  if (n < 0 || !(dk > 0.0))
    fail(ErrorKind::invalid_input, "grid needs n >= 0 and dk > 0");
  Vec3 total{};
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j)
      for (int l = -n; l <= n; ++l) {
        const Vec3 k{i * dk, j * dk, l * dk};
        const double w = std::exp(-dot(k, k));
        total = total + (PC::hbar_si * w) * k;
      }
  return total;
}

Prediction replay(const Prediction& p) {
  switch (p.model) {
    case Model::me_sphere: {
      SphereSpec s = digest_sphere(p);
      s.material.me_coupling = p.digest_value("me_coupling");
      FieldConfig f;
      f.E0 = digest_vec(p, "E0");
      f.B0 = digest_vec(p, "B0");
      return me_sphere_velocity(s, f, digest_constants(p));
    }
    case Model::moving_sphere:
      return moving_sphere(digest_sphere(p), digest_vec(p, "velocity"), digest_constants(p));
    case Model::magneto_chiral: {
      SphereSpec s = digest_sphere(p);
      s.material.verdet_v0 = p.digest_value("verdet_v0");
      s.material.chirality_g = p.digest_value("chirality_g");
      return magneto_chiral(s, digest_vec(p, "B_gauss"));
    }
    case Model::feigel_cutoff:
      return feigel_cutoff(p.digest_value("chi_s0"), p.digest_value("epsilon"),
                           p.digest_value("mass_density_kg_m3"),
                           p.digest_value("cutoff_wavelength_m"), digest_vec(p, "direction"),
                           p.digest_value("mu"));
    case Model::first_born: {
      Mat3 m{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          m[i][j] = p.digest_value(std::string("chi_") + kAxes[i] + kAxes[j]);
      const bool cutoff = p.digest_value("cutoff_mode") != 0.0;
      std::optional<double> k;
      if (cutoff) k = p.digest_value("k_cut_per_m");
      return first_born(digest_sphere(p), ChiTensor::general(m),
                        cutoff ? BornMode::cutoff : BornMode::dimensional, k,
                        p.digest_value("mu"));
    }
  }
  fail(ErrorKind::invalid_input, "unknown model");
}

}  // namespace zpm
