#include "zpm/zpm.h"

#include <cmath>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "zpm/contour_frequency.hpp"
#include "zpm/error.hpp"
#include "zpm/oscillatory_integrals.hpp"
#include "zpm/point_dipole.hpp"
#include "zpm/predictions.hpp"
#include "zpm/tensor_assembly.hpp"
#include "zpm/units.hpp"

struct zpm_context {
  std::vector<double> schedule{zpm::kDefaultSchedule.begin(), zpm::kDefaultSchedule.end()};
  zpm::BruteForceOptions options;
  bool trig_source = false;
  std::optional<zpm::ConstantSet> constants;
  std::optional<double> E_quadrature;
  std::string last_error;
};

struct zpm_prediction {
  zpm::Prediction p;
  std::string model;
};

namespace {

zpm_status status_of(zpm::ErrorKind kind) {
  switch (kind) {
    case zpm::ErrorKind::invalid_input: return ZPM_INVALID_ARGUMENT;
    case zpm::ErrorKind::domain: return ZPM_DOMAIN;
    case zpm::ErrorKind::convergence: return ZPM_CONVERGENCE;
    case zpm::ErrorKind::io: return ZPM_IO;
  }
  return ZPM_INTERNAL;
}

// Runs f, translating exceptions into a status and the context's last error.
template <class F>
zpm_status guarded(zpm_context* ctx, F&& f) {
  if (!ctx) return ZPM_INVALID_ARGUMENT;
  try {
    f();
    ctx->last_error.clear();
    return ZPM_OK;
  } catch (const zpm::Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
  } catch (...) {
    ctx->last_error = "unknown error";
  }
  return ZPM_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) zpm::fail(zpm::ErrorKind::invalid_input, what);
}

zpm::Vec3 vec(const double* v) {
  require(v != nullptr, "null vector argument");
  return {v[0], v[1], v[2]};
}

void store(const zpm::Vec3& v, double* out) {
  for (int i = 0; i < 3; ++i) out[i] = v[i];
}

zpm::Mat3 mat(const double* m) {
  require(m != nullptr, "null matrix argument");
  zpm::Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[3 * i + j];
  return r;
}

zpm::SphereSpec sphere_of(const zpm_sphere* s) {
  require(s != nullptr, "null sphere");
  zpm::SphereSpec r;
  r.radius_a = s->radius_m;
  r.material.epsilon = s->epsilon;
  r.material.mass_density = s->mass_density_kg_m3;
  if (s->has_me_coupling) r.material.me_coupling = s->me_coupling;
  if (s->has_verdet_v0) r.material.verdet_v0 = s->verdet_v0;
  if (s->has_chirality_g) r.material.chirality_g = s->chirality_g;
  return r;
}

void emit(zpm::Prediction p, zpm_prediction** out) {
  require(out != nullptr, "null output handle");
  auto h = std::make_unique<zpm_prediction>();
  h->model = std::string(zpm::to_string(p.model));
  h->p = std::move(p);
  *out = h.release();
}

const zpm::ConstantSet& constants_of(zpm_context* ctx) {
  using zpm::ConstantName;
  if (!ctx->constants) {
    auto bf = [&](ConstantName n) {
      return zpm::eval_bruteforce(n, ctx->schedule, ctx->options).value;
    };
    auto trig = [](ConstantName n) { return zpm::eval_trig(n).value; };
    zpm::ConstantSet c;
    if (ctx->trig_source) {
      c.I0 = trig(ConstantName::I0);
      c.I1 = trig(ConstantName::I1);
      c.A = trig(ConstantName::A);
      c.C = trig(ConstantName::C);
    } else {
      c.I0 = bf(ConstantName::I0);
      c.I1 = bf(ConstantName::I1);
      c.A = bf(ConstantName::A);
      c.C = bf(ConstantName::C);
    }
    c.D = bf(ConstantName::D);
    c.E = trig(ConstantName::E);
    ctx->constants = c;
  }
  return *ctx->constants;
}

zpm::ConstantSet from_c(const zpm_constant_set& c) { return {c.I0, c.I1, c.A, c.C, c.D, c.E}; }

}  // namespace

extern "C" {

const char* zpm_version(void) { return "0.1.0"; }

const char* zpm_status_string(zpm_status status) {
  switch (status) {
    case ZPM_OK: return "ok";
    case ZPM_INVALID_ARGUMENT: return "invalid argument";
    case ZPM_DOMAIN: return "outside domain";
    case ZPM_CONVERGENCE: return "convergence failure";
    case ZPM_IO: return "i/o error";
    case ZPM_INTERNAL: return "internal error";
  }
  return "unknown status";
}

zpm_status zpm_context_create(zpm_context** out) {
  if (!out) return ZPM_INVALID_ARGUMENT;
  *out = new (std::nothrow) zpm_context();
  return *out ? ZPM_OK : ZPM_INTERNAL;
}

void zpm_context_destroy(zpm_context* ctx) { delete ctx; }

const char* zpm_last_error(const zpm_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

zpm_status zpm_set_eps_schedule(zpm_context* ctx, const double* eps, size_t n) {
  return guarded(ctx, [&] {
    require(eps != nullptr && n >= 2, "schedule needs at least two values");
    std::vector<double> s(eps, eps + n);
    for (std::size_t i = 0; i < n; ++i) {
      require(s[i] > 0.0 && s[i] <= 0.2, "schedule values must lie in (0, 0.2]");
      require(i == 0 || s[i] < s[i - 1], "schedule must be strictly descending");
    }
    ctx->schedule = std::move(s);
    ctx->constants.reset();
    ctx->E_quadrature.reset();
  });
}

zpm_status zpm_set_tolerance(zpm_context* ctx, double rel_tol) {
  return guarded(ctx, [&] {
    require(rel_tol >= 1e-14 && rel_tol <= 1e-4, "tolerance must lie in [1e-14, 1e-4]");
    ctx->options.quadrature_rel_tol = rel_tol;
    ctx->constants.reset();
    ctx->E_quadrature.reset();
  });
}

zpm_status zpm_set_constant_source(zpm_context* ctx, const char* source) {
  return guarded(ctx, [&] {
    require(source != nullptr, "null source");
    const std::string s(source);
    require(s == "quadrature" || s == "trig", "source must be 'quadrature' or 'trig'");
    const bool trig = s == "trig";
    if (trig != ctx->trig_source) ctx->constants.reset();
    ctx->trig_source = trig;
  });
}

zpm_status zpm_constant_trig(zpm_context* ctx, const char* name, zpm_integral* out) {
  return guarded(ctx, [&] {
    require(name && out, "null argument");
    const auto r = zpm::eval_trig(zpm::constant_from_string(name));
    *out = {r.value, r.error_estimate};
  });
}

zpm_status zpm_constant_bruteforce(zpm_context* ctx, const char* name, zpm_integral* out) {
  return guarded(ctx, [&] {
    require(name && out, "null argument");
    const auto r = zpm::eval_bruteforce(zpm::constant_from_string(name), ctx->schedule,
                                        ctx->options);
    *out = {r.value, r.error_estimate};
  });
}

zpm_status zpm_constants(zpm_context* ctx, zpm_constant_set* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    const auto& c = constants_of(ctx);
    *out = {c.I0, c.I1, c.A, c.C, c.D, c.E};
  });
}

zpm_status zpm_eta(zpm_context* ctx, zpm_eta_report* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    const zpm::ConstantSet c = constants_of(ctx);
    if (!ctx->E_quadrature)
      ctx->E_quadrature =
          zpm::eval_bruteforce(zpm::ConstantName::E, ctx->schedule, ctx->options).value;
    const auto r = zpm::eta_consistency(c);
    zpm::ConstantSet cq = c;
    cq.E = *ctx->E_quadrature;
    *out = {r.eta_computed,          r.eta_published,      r.eta_rel_deviation,
            r.D_implied_face_value,  r.D_implied_signed,   r.D_quadrature,
            r.discrepancy_face_value, r.discrepancy_signed, zpm::eta(cq),
            *ctx->E_quadrature};
  });
}

double zpm_eta_of(const zpm_constant_set* constants) {
  return constants ? zpm::eta(from_c(*constants)) : 0.0;
}

zpm_status zpm_freq_check(zpm_context* ctx, const char* kind, double k, double kp,
                          double eps_base, zpm_freq_result* out) {
  return guarded(ctx, [&] {
    require(kind && out, "null argument");
    const auto r = zpm::freq_oracle(zpm::freq_kind_from_string(kind), k, kp, eps_base);
    *out = {r.closed_form.real(), r.closed_form.imag(), r.numeric.real(),
            r.numeric.imag(),     r.error_estimate,     r.rel_error};
  });
}

zpm_status zpm_regularized_K(zpm_context* ctx, double a, double* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    *out = zpm::regularized_K(a);
  });
}

zpm_status zpm_second_born(zpm_context* ctx, double radius, double epsilon,
                           const double chi[9], zpm_born_breakdown* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    const auto b = zpm::second_born_momentum(radius, epsilon, zpm::ChiTensor::general(mat(chi)),
                                             constants_of(ctx));
    store(b.contrib_0, out->contrib_0);
    store(b.contrib_1, out->contrib_1);
    store(b.contrib_2, out->contrib_2);
    store(b.total, out->total);
    out->K_used = b.K_used;
  });
}

void zpm_vdw_mapping_check(zpm_vdw_mapping* out) {
  if (!out) return;
  const auto r = zpm::vdw_mapping_check();
  *out = {r.from_regularized_K, r.quoted, r.ratio};
}

zpm_status zpm_dipole(zpm_context* ctx, double alpha, double alpha0, double gamma,
                      double hbar_omega0_eV, const double v[3], zpm_dipole_result* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    using PC = zpm::PhysicalConstants;
    const bool has_gamma = !std::isnan(gamma);
    const bool has_energy = !std::isnan(hbar_omega0_eV);
    require(has_gamma || has_energy, "either gamma or hbar omega0 is required");
    const zpm::DipoleSpec spec = has_gamma
                                     ? zpm::DipoleSpec::from(alpha, alpha0, gamma)
                                     : zpm::DipoleSpec::from_resonance(alpha, alpha0, hbar_omega0_eV);
    const double energy_eV = PC::hbar_si * spec.omega0() / PC::eV_si;
    if (has_gamma && has_energy && std::fabs(energy_eV - hbar_omega0_eV) > 1e-9 * energy_eV)
      zpm::fail(zpm::ErrorKind::invalid_input,
                "gamma and hbar omega0 are inconsistent: (alpha0, gamma) give hbar omega0 = " +
                    std::to_string(energy_eV) + " eV");
    const auto J = zpm::t0_frequency_integral(spec);
    const auto p = zpm::p_rad_total(spec, vec(v));
    out->alpha = spec.alpha();
    out->alpha0 = spec.alpha0();
    out->gamma = spec.gamma();
    out->kappa0 = spec.kappa0();
    out->omega0 = spec.omega0();
    out->hbar_omega0_eV = energy_eV;
    out->linewidth = spec.linewidth();
    out->mass_shift = zpm::mass_shift(spec);
    out->integral_numeric = J.numeric;
    out->integral_error = J.error;
    out->integral_narrow_line = J.narrow_line;
    out->integral_exact = J.exact;
    store(p.numeric, out->p_numeric);
    store(p.closed_form, out->p_closed_form);
    out->p_rel_deviation = p.rel_deviation;
  });
}

zpm_status zpm_load_material(zpm_context* ctx, const char* path, zpm_sphere* sphere) {
  return guarded(ctx, [&] {
    require(path && sphere, "null argument");
    const auto m = zpm::load_material(path);
    sphere->epsilon = m.epsilon;
    sphere->mass_density_kg_m3 = m.mass_density;
    sphere->has_me_coupling = m.me_coupling.has_value();
    sphere->me_coupling = m.me_coupling.value_or(0.0);
    sphere->has_verdet_v0 = m.verdet_v0.has_value();
    sphere->verdet_v0 = m.verdet_v0.value_or(0.0);
    sphere->has_chirality_g = m.chirality_g.has_value();
    sphere->chirality_g = m.chirality_g.value_or(0.0);
  });
}

zpm_status zpm_predict_me_sphere(zpm_context* ctx, const zpm_sphere* sphere,
                                 const double E0[3], const double B0[3], zpm_prediction** out) {
  return guarded(ctx, [&] {
    zpm::FieldConfig f;
    f.E0 = vec(E0);
    f.B0 = vec(B0);
    emit(zpm::me_sphere_velocity(sphere_of(sphere), f, constants_of(ctx)), out);
  });
}

zpm_status zpm_predict_moving_sphere(zpm_context* ctx, const zpm_sphere* sphere,
                                     const double v[3], zpm_prediction** out) {
  return guarded(ctx, [&] {
    emit(zpm::moving_sphere(sphere_of(sphere), vec(v), constants_of(ctx)), out);
  });
}

zpm_status zpm_predict_magneto_chiral(zpm_context* ctx, const zpm_sphere* sphere,
                                      const double B[3], zpm_prediction** out) {
  return guarded(ctx, [&] { emit(zpm::magneto_chiral(sphere_of(sphere), vec(B)), out); });
}

zpm_status zpm_predict_feigel(zpm_context* ctx, double chi_s0, double epsilon,
                              double mass_density_kg_m3, double cutoff_wavelength_m,
                              const double direction[3], double mu, zpm_prediction** out) {
  return guarded(ctx, [&] {
    emit(zpm::feigel_cutoff(chi_s0, epsilon, mass_density_kg_m3, cutoff_wavelength_m,
                            vec(direction), mu),
         out);
  });
}

zpm_status zpm_predict_first_born(zpm_context* ctx, const zpm_sphere* sphere,
                                  const double chi[9], int mode, double k_cut, double mu,
                                  zpm_prediction** out) {
  return guarded(ctx, [&] {
    require(mode == 0 || mode == 1, "mode must be 0 (dimensional) or 1 (cutoff)");
    std::optional<double> k;
    if (mode == 1) k = k_cut;
    emit(zpm::first_born(sphere_of(sphere), zpm::ChiTensor::general(mat(chi)),
                         mode == 1 ? zpm::BornMode::cutoff : zpm::BornMode::dimensional, k, mu),
         out);
  });
}

zpm_status zpm_prediction_replay(zpm_context* ctx, const zpm_prediction* p,
                                 zpm_prediction** out) {
  return guarded(ctx, [&] {
    require(p != nullptr, "null prediction");
    emit(zpm::replay(p->p), out);
  });
}

void zpm_prediction_destroy(zpm_prediction* p) { delete p; }

const char* zpm_prediction_model(const zpm_prediction* p) { return p ? p->model.c_str() : ""; }

void zpm_prediction_momentum(const zpm_prediction* p, double out[3]) {
  if (p && out) store(p->p.momentum, out);
}

void zpm_prediction_velocity(const zpm_prediction* p, double out[3]) {
  if (p && out) store(p->p.velocity, out);
}

double zpm_prediction_mass_shift(const zpm_prediction* p) { return p ? p->p.mass_shift : 0.0; }

int zpm_prediction_probably_wrong(const zpm_prediction* p) {
  return p && p->p.macroscopic_model_probably_wrong ? 1 : 0;
}

size_t zpm_prediction_warning_count(const zpm_prediction* p) {
  return p ? p->p.warnings.size() : 0;
}

const char* zpm_prediction_warning(const zpm_prediction* p, size_t i) {
  if (!p || i >= p->p.warnings.size()) return "";
  return p->p.warnings[i].c_str();
}

size_t zpm_prediction_digest_count(const zpm_prediction* p) {
  return p ? p->p.inputs_digest.size() : 0;
}

zpm_status zpm_prediction_digest_entry(const zpm_prediction* p, size_t i, const char** name,
                                       double* value, const char** source) {
  if (!p || i >= p->p.inputs_digest.size()) return ZPM_INVALID_ARGUMENT;
  const auto& e = p->p.inputs_digest[i];
  if (name) *name = e.name.c_str();
  if (value) *value = e.value;
  if (source) *source = e.source.c_str();
  return ZPM_OK;
}

void zpm_empty_vacuum(double out[3]) {
  if (out) store(zpm::empty_vacuum_momentum(), out);
}

zpm_status zpm_empty_vacuum_grid(zpm_context* ctx, int n, double dk, double out[3]) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null output");
    store(zpm::empty_vacuum_grid_sum(n, dk), out);
  });
}

}  // extern "C"
