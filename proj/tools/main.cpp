// zpm: command-line front end. Talks to the library only through zpm.h.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zpm/zpm.h"

namespace {

using json = nlohmann::json;
using Vec = std::array<double, 3>;

struct Row {
  std::string name;
  double value = 0.0;
  double error = 0.0;
  std::string method;
};

struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<Row> results;
  std::vector<std::string> warnings;
};

// Status-carrying failure from the library, turned into an exit code in main.
struct Failure {
  zpm_status status;
  std::string message;
};

class Context {
 public:
  Context() {
    if (zpm_context_create(&ctx_) != ZPM_OK) throw Failure{ZPM_INTERNAL, "cannot create context"};
  }
  ~Context() { zpm_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
  zpm_context* get() { return ctx_; }
  void check(zpm_status s) {
    if (s != ZPM_OK) throw Failure{s, zpm_last_error(ctx_)};
  }

 private:
  zpm_context* ctx_ = nullptr;
};

class PredictionHandle {
 public:
  ~PredictionHandle() { zpm_prediction_destroy(p_); }
  zpm_prediction** out() { return &p_; }
  const zpm_prediction* get() const { return p_; }

 private:
  zpm_prediction* p_ = nullptr;
};

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json to_json(const Report& r) {
  json results = json::array();
  for (const auto& row : r.results)
    results.push_back({{"name", row.name}, {"value", row.value}, {"error", row.error},
                       {"method", row.method}});
  return {{"command", r.command}, {"inputs", r.inputs},      {"results", results},
          {"warnings", r.warnings}, {"version", zpm_version()}};
}

void print(const Report& r, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "name,value,error,method\n";
    for (const auto& row : r.results)
      std::cout << csv_field(row.name) << "," << number(row.value) << "," << number(row.error)
                << "," << csv_field(row.method) << "\n";
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  } else {
    std::cout << r.command << " (zpm " << zpm_version() << ")\n";
    for (const auto& row : r.results) {
      std::cout << "  " << row.name << " = " << number(row.value);
      if (row.error != 0.0) std::cout << " +- " << number(row.error);
      if (!row.method.empty()) std::cout << "  [" << row.method << "]";
      std::cout << "\n";
    }
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
  }
}

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw Failure{ZPM_INVALID_ARGUMENT, "bad --eps-schedule entry '" + item + "'"};
    out.push_back(v);
  }
  return out;
}

std::string resolve_material(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  const fs::path preset = fs::path(ZPM_DATA_DIR) / path;
  if (fs::exists(preset)) return preset.string();
  const fs::path with_ext = fs::path(ZPM_DATA_DIR) / (path + ".json");
  if (fs::exists(with_ext)) return with_ext.string();
  return path;  // let the library report the io error
}

json vec_json(const Vec& v) { return json::array({v[0], v[1], v[2]}); }

void add_vec_rows(Report& r, const std::string& name, const double* v, const std::string& method) {
  static const char* axes[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) r.results.push_back({name + "_" + axes[i], v[i], 0.0, method});
}

void add_prediction(Report& r, const PredictionHandle& h, const std::string& momentum_name) {
  const zpm_prediction* p = h.get();
  const std::string model = zpm_prediction_model(p);
  double m[3], v[3];
  zpm_prediction_momentum(p, m);
  zpm_prediction_velocity(p, v);
  add_vec_rows(r, momentum_name, m, model);
  add_vec_rows(r, "velocity_m_s", v, model);
  r.results.push_back({"speed_m_s", std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]), 0.0, model});
  r.results.push_back({"mass_shift_kg", zpm_prediction_mass_shift(p), 0.0, model});
  json digest = json::array();
  for (std::size_t i = 0; i < zpm_prediction_digest_count(p); ++i) {
    const char* name = nullptr;
    const char* source = nullptr;
    double value = 0.0;
    zpm_prediction_digest_entry(p, i, &name, &value, &source);
    digest.push_back({{"name", name}, {"value", value}, {"source", source}});
  }
  r.inputs["digest"] = digest;
  r.inputs["macroscopic_model_probably_wrong"] = zpm_prediction_probably_wrong(p) != 0;
  for (std::size_t i = 0; i < zpm_prediction_warning_count(p); ++i)
    r.warnings.emplace_back(zpm_prediction_warning(p, i));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-point momentum of bi-anisotropic objects"};
  app.set_version_flag("--version", std::string(zpm_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  double tol = 0.0;
  std::string schedule_text;
  std::string material_path;
  std::string constant_source = "quadrature";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--tol", tol, "Relative quadrature tolerance of the regulated constants");
  app.add_option("--eps-schedule", schedule_text,
                 "Comma-separated regulator schedule, descending (default 0.1,0.05,0.025)");
  app.add_option("--material", material_path, "Material JSON file or preset name");
  app.add_option("--constants", constant_source, "Constants feeding eta and predictions")
      ->check(CLI::IsMember({"quadrature", "trig"}));

  // constants
  auto* constants_cmd = app.add_subcommand("constants", "Evaluate the integral constants");
  std::string method = "both";
  constants_cmd->add_option("--method", method, "trig, bruteforce or both")
      ->check(CLI::IsMember({"trig", "bruteforce", "both"}));

  auto* eta_cmd = app.add_subcommand("eta", "Evaluate eta and its consistency report");

  // freq-check
  auto* freq_cmd = app.add_subcommand("freq-check", "Check frequency contour integrals");
  double fk = 1.0, fkp = 2.0, feps = 1e-3;
  std::string fkind = "both";
  freq_cmd->add_option("--k", fk, "Wavenumber k (> 0)");
  freq_cmd->add_option("--kp", fkp, "Wavenumber k' (> 0)");
  freq_cmd->add_option("--eps", feps, "Base regulator");
  freq_cmd->add_option("--kind", fkind, "transverse, one_longitudinal or both")
      ->check(CLI::IsMember({"transverse", "one_longitudinal", "both"}));

  // dipole
  auto* dipole_cmd = app.add_subcommand("dipole", "Moving point dipole mass shift");
  double alpha = 0.0, alpha0 = 0.0, gamma = NAN, energy = NAN;
  Vec dv{1.0, 0.0, 0.0};
  dipole_cmd->add_option("--alpha", alpha, "Bare polarizability (m^3)")->required();
  dipole_cmd->add_option("--alpha0", alpha0, "Regularized polarizability (m^3)")->required();
  auto* gamma_opt = dipole_cmd->add_option("--gamma", gamma, "Gamma = 1/Lambda_T (m)");
  auto* energy_opt = dipole_cmd->add_option("--hbar-omega0-eV", energy, "Resonance energy (eV)");
  dipole_cmd->add_option("--v", dv, "Velocity (m/s)");
  (void)gamma_opt;
  (void)energy_opt;

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Physical predictions");
  predict_cmd->require_subcommand(1);
  double a_um = 1.0, a_m = 0.0, epsilon = NAN, rho = NAN, me_coupling = NAN;
  Vec E{1.0, 0.0, 0.0}, B{0.0, 1.0, 0.0}, mv_v{1.0, 0.0, 0.0};
  auto sphere_opts = [&](CLI::App* c) {
    c->add_option("--a-um", a_um, "Sphere radius (micrometres)");
    c->add_option("--a-m", a_m, "Sphere radius (metres); overrides --a-um");
    c->add_option("--epsilon", epsilon, "Dielectric constant (overrides material)");
    c->add_option("--rho", rho, "Mass density kg/m^3 (overrides material)");
  };
  auto* me_cmd = predict_cmd->add_subcommand("me-sphere", "Magneto-electric sphere");
  sphere_opts(me_cmd);
  me_cmd->add_option("--me-coupling", me_coupling, "g_EM |E| |B| (overrides material)");
  me_cmd->add_option("--E", E, "Electric field direction (Gaussian)");
  me_cmd->add_option("--B", B, "Magnetic field direction (Gaussian)");
  auto* moving_cmd = predict_cmd->add_subcommand("moving-sphere", "Dielectric sphere in motion");
  sphere_opts(moving_cmd);
  moving_cmd->add_option("--v", mv_v, "Velocity (m/s)");
  auto* mc_cmd = predict_cmd->add_subcommand("magneto-chiral", "Magneto-chiral sphere");
  sphere_opts(mc_cmd);
  mc_cmd->add_option("--B", B, "Magnetic field (gauss)");
  auto* feigel_cmd = predict_cmd->add_subcommand("feigel", "Cutoff-regularized momentum density");
  double chi_s0 = NAN, cutoff_nm = 0.1, mu = 1.0;
  Vec dir{0.0, 0.0, 1.0};
  feigel_cmd->add_option("--chi-s0", chi_s0, "chi S0 (default: material me_coupling, else 1e-11)");
  feigel_cmd->add_option("--cutoff-nm", cutoff_nm, "Cutoff wavelength (nm)");
  feigel_cmd->add_option("--mu", mu, "Permeability");
  feigel_cmd->add_option("--epsilon", epsilon, "Dielectric constant (default 1)");
  feigel_cmd->add_option("--rho", rho, "Mass density kg/m^3 (default 1000)");
  feigel_cmd->add_option("--direction", dir, "Direction of chi S0");

  auto* vacuum_cmd = app.add_subcommand("empty-vacuum", "Zero-point momentum of empty space");
  int grid_n = 8;
  double grid_dk = 0.25;
  vacuum_cmd->add_option("--grid-n", grid_n, "Half-width of the symmetric k grid");
  vacuum_cmd->add_option("--dk", grid_dk, "Grid spacing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message and usage to stderr
    return 2;
  }

  try {
    Context ctx;
    Report report;
    if (!schedule_text.empty()) {
      const auto s = parse_schedule(schedule_text);
      ctx.check(zpm_set_eps_schedule(ctx.get(), s.data(), s.size()));
      report.inputs["eps_schedule"] = s;
    }
    if (tol != 0.0) {
      ctx.check(zpm_set_tolerance(ctx.get(), tol));
      report.inputs["tol"] = tol;
    }
    ctx.check(zpm_set_constant_source(ctx.get(), constant_source.c_str()));

    auto eta_rows = [&] {
      zpm_eta_report e{};
      ctx.check(zpm_eta(ctx.get(), &e));
      report.results.push_back({"eta", e.eta, 0.0, "formula"});
      report.results.push_back({"eta_published", e.eta_published, 0.0, "published"});
      report.results.push_back({"eta_rel_deviation", e.eta_rel_deviation, 0.0, "derived"});
      report.results.push_back({"eta_with_quadrature_E", e.eta_with_quadrature_E, 0.0, "formula"});
      report.results.push_back({"E_quadrature", e.E_quadrature, 0.0, "regulated_quadrature"});
      report.results.push_back({"D_quadrature", e.D_quadrature, 0.0, "regulated_quadrature"});
      report.results.push_back({"D_implied_face_value", e.D_implied_face_value, 0.0, "derived"});
      report.results.push_back({"D_implied_signed", e.D_implied_signed, 0.0, "derived"});
      report.results.push_back({"D_discrepancy_face_value", e.discrepancy_face_value, 0.0, "derived"});
      report.results.push_back({"D_discrepancy_signed", e.discrepancy_signed, 0.0, "derived"});
      if (e.eta < 0.0)
        report.warnings.push_back("eta is negative with the signed constants; the published "
                                  "value is positive, comparison is by magnitude");
      report.warnings.push_back(
          "implied D (" + number(e.D_implied_face_value) + " face value, " +
          number(e.D_implied_signed) + " sign-consistent) differs from the quadrature D (" +
          number(e.D_quadrature) + ")");
      report.warnings.push_back("E from its defining integral (" + number(e.E_quadrature) +
                                ") differs from E1+E2+E3 used in eta");
      zpm_vdw_mapping vdw{};
      zpm_vdw_mapping_check(&vdw);
      report.results.push_back({"vdw_coefficient_from_K", vdw.from_regularized_K, 0.0, "derived"});
      report.results.push_back({"vdw_coefficient_quoted", vdw.quoted, 0.0, "published"});
      report.warnings.push_back("regularized K inserted into the Van der Waals prefactor gives " +
                                number(vdw.from_regularized_K) + ", the quoted coefficient is " +
                                number(vdw.quoted) + " (ratio " + number(vdw.ratio) +
                                "); mapping not asserted");
    };

    zpm_sphere sphere{};
    auto build_sphere = [&](bool me) {
      if (!material_path.empty()) {
        const std::string path = resolve_material(material_path);
        ctx.check(zpm_load_material(ctx.get(), path.c_str(), &sphere));
        report.inputs["material"] = path;
      } else {
        sphere.epsilon = 2.0;
        sphere.mass_density_kg_m3 = 1000.0;
      }
      sphere.radius_m = a_m > 0.0 ? a_m : a_um * 1e-6;
      if (!std::isnan(epsilon)) sphere.epsilon = epsilon;
      if (!std::isnan(rho)) sphere.mass_density_kg_m3 = rho;
      if (me && !std::isnan(me_coupling)) {
        sphere.has_me_coupling = 1;
        sphere.me_coupling = me_coupling;
      }
      report.inputs["radius_m"] = sphere.radius_m;
      report.inputs["epsilon"] = sphere.epsilon;
      report.inputs["mass_density_kg_m3"] = sphere.mass_density_kg_m3;
      report.inputs["constants"] = constant_source;
    };

    if (*constants_cmd) {
      report.command = "constants";
      report.inputs["method"] = method;
      if (method != "bruteforce")
        for (const char* n : {"I0", "I1", "A", "C", "E1", "E2", "E3", "E"}) {
          zpm_integral r{};
          ctx.check(zpm_constant_trig(ctx.get(), n, &r));
          report.results.push_back({n, r.value, r.error_estimate, "trig_reduction"});
        }
      if (method != "trig")
        for (const char* n : {"I0", "I1", "A", "C", "D", "E"}) {
          zpm_integral r{};
          ctx.check(zpm_constant_bruteforce(ctx.get(), n, &r));
          report.results.push_back({n, r.value, r.error_estimate, "regulated_quadrature"});
        }
      if (method != "trig") {
        zpm_constant_set c{};
        ctx.check(zpm_constants(ctx.get(), &c));
        report.results.push_back({"eta", zpm_eta_of(&c), 0.0, "formula"});
        report.warnings.push_back("the printed I0 is +0.589; the defining integral is negative");
      }
      if (method == "both")
        report.warnings.push_back("E1 by trig reduction (21 pi/8) differs from the E1 part of the "
                                  "defining integral (15 pi/8)");
    } else if (*eta_cmd) {
      report.command = "eta";
      report.inputs["constants"] = constant_source;
      eta_rows();
    } else if (*freq_cmd) {
      report.command = "freq-check";
      report.inputs = {{"k", fk}, {"kp", fkp}, {"eps", feps}, {"kind", fkind}};
      std::vector<std::string> kinds;
      if (fkind == "both") kinds = {"transverse", "one_longitudinal"};
      else kinds = {fkind};
      for (const auto& kind : kinds) {
        zpm_freq_result r{};
        ctx.check(zpm_freq_check(ctx.get(), kind.c_str(), fk, fkp, feps, &r));
        report.results.push_back({kind + "_closed_re", r.closed_re, 0.0, "closed_form"});
        report.results.push_back({kind + "_closed_im", r.closed_im, 0.0, "closed_form"});
        report.results.push_back({kind + "_numeric_re", r.numeric_re, r.error_estimate, "regulated_quadrature"});
        report.results.push_back({kind + "_numeric_im", r.numeric_im, r.error_estimate, "regulated_quadrature"});
        report.results.push_back({kind + "_rel_error", r.rel_error, 0.0, "derived"});
        if (r.rel_error > 1e-5)
          report.warnings.push_back(kind + ": closed form and quadrature differ by " +
                                    number(r.rel_error));
      }
    } else if (*dipole_cmd) {
      report.command = "dipole";
      report.inputs = {{"alpha_m3", alpha}, {"alpha0_m3", alpha0}, {"velocity_m_s", vec_json(dv)}};
      if (!std::isnan(gamma)) report.inputs["gamma_m"] = gamma;
      if (!std::isnan(energy)) report.inputs["hbar_omega0_eV"] = energy;
      zpm_dipole_result d{};
      ctx.check(zpm_dipole(ctx.get(), alpha, alpha0, gamma, energy, dv.data(), &d));
      report.results.push_back({"gamma_m", d.gamma, 0.0, "input"});
      report.results.push_back({"kappa0_per_m", d.kappa0, 0.0, "derived"});
      report.results.push_back({"omega0_rad_s", d.omega0, 0.0, "derived"});
      report.results.push_back({"hbar_omega0_eV", d.hbar_omega0_eV, 0.0, "derived"});
      report.results.push_back({"linewidth_per_m", d.linewidth, 0.0, "derived"});
      report.results.push_back({"mass_shift_kg", d.mass_shift, 0.0, "closed_form"});
      report.results.push_back({"spectral_integral", d.integral_numeric, d.integral_error, "quadrature"});
      report.results.push_back({"spectral_integral_narrow_line", d.integral_narrow_line, 0.0, "closed_form"});
      report.results.push_back({"spectral_integral_exact", d.integral_exact, 0.0, "closed_form"});
      add_vec_rows(report, "p_rad_kg_m_s", d.p_numeric, "quadrature");
      add_vec_rows(report, "p_rad_closed_form_kg_m_s", d.p_closed_form, "closed_form");
      report.results.push_back({"p_rad_rel_deviation", d.p_rel_deviation, 0.0, "derived"});
      if (d.p_rel_deviation > 1e-4)
        report.warnings.push_back("the line is not narrow (width/kappa0 = " +
                                  number(d.linewidth / d.kappa0) +
                                  "); the frequency integral deviates from the closed form by " +
                                  number(d.p_rel_deviation));
    } else if (*predict_cmd) {
      PredictionHandle h;
      if (*me_cmd) {
        report.command = "predict me-sphere";
        build_sphere(true);
        report.inputs["E0"] = vec_json(E);
        report.inputs["B0"] = vec_json(B);
        ctx.check(zpm_predict_me_sphere(ctx.get(), &sphere, E.data(), B.data(), h.out()));
        add_prediction(report, h, "momentum_kg_m_s");
      } else if (*moving_cmd) {
        report.command = "predict moving-sphere";
        build_sphere(false);
        report.inputs["velocity_m_s"] = vec_json(mv_v);
        ctx.check(zpm_predict_moving_sphere(ctx.get(), &sphere, mv_v.data(), h.out()));
        add_prediction(report, h, "p_rad_kg_m_s");
        report.results.push_back({"mass_shift_electron_masses",
                                  zpm_prediction_mass_shift(h.get()) / 9.1093837015e-31, 0.0,
                                  "moving_sphere"});
      } else if (*mc_cmd) {
        report.command = "predict magneto-chiral";
        build_sphere(false);
        report.inputs["B_gauss"] = vec_json(B);
        ctx.check(zpm_predict_magneto_chiral(ctx.get(), &sphere, B.data(), h.out()));
        add_prediction(report, h, "momentum_kg_m_s");
      } else {
        report.command = "predict feigel";
        double eps_f = 1.0, rho_f = 1000.0, chi = 1e-11;
        if (!material_path.empty()) {
          const std::string path = resolve_material(material_path);
          ctx.check(zpm_load_material(ctx.get(), path.c_str(), &sphere));
          report.inputs["material"] = path;
          eps_f = sphere.epsilon;
          rho_f = sphere.mass_density_kg_m3;
          if (sphere.has_me_coupling) chi = sphere.me_coupling;
        }
        if (!std::isnan(epsilon)) eps_f = epsilon;
        if (!std::isnan(rho)) rho_f = rho;
        if (!std::isnan(chi_s0)) chi = chi_s0;
        report.inputs["chi_s0"] = chi;
        report.inputs["epsilon"] = eps_f;
        report.inputs["mass_density_kg_m3"] = rho_f;
        report.inputs["cutoff_nm"] = cutoff_nm;
        report.inputs["mu"] = mu;
        ctx.check(zpm_predict_feigel(ctx.get(), chi, eps_f, rho_f, cutoff_nm * 1e-9, dir.data(),
                                     mu, h.out()));
        add_prediction(report, h, "momentum_density_kg_m2_s");
      }
    } else if (*vacuum_cmd) {
      report.command = "empty-vacuum";
      report.inputs = {{"grid_n", grid_n}, {"dk", grid_dk}};
      double zero[3], grid[3];
      zpm_empty_vacuum(zero);
      ctx.check(zpm_empty_vacuum_grid(ctx.get(), grid_n, grid_dk, grid));
      add_vec_rows(report, "momentum", zero, "dimensional_regularization");
      add_vec_rows(report, "grid_sum", grid, "symmetric_grid");
    }
    print(report, format);
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << " (" << zpm_status_string(f.status) << ")\n";
    switch (f.status) {
      case ZPM_CONVERGENCE: return 3;
      case ZPM_INTERNAL: return 1;
      default: return 2;
    }
  }
}
