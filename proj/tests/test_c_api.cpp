// Exercises the shared library through its C header only.
#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "zpm/zpm.h"

namespace {

struct Ctx {
  zpm_context* c = nullptr;
  Ctx() { REQUIRE(zpm_context_create(&c) == ZPM_OK); }
  ~Ctx() { zpm_context_destroy(c); }
};

zpm_sphere fegao3(zpm_context* c) {
  zpm_sphere s{};
  REQUIRE(zpm_load_material(c, ZPM_DATA_DIR "/fegao3.json", &s) == ZPM_OK);
  s.radius_m = 1e-6;
  return s;
}

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(zpm_version()) == "0.1.0");
  CHECK(std::string(zpm_status_string(ZPM_CONVERGENCE)) == "convergence failure");
  CHECK(zpm_context_create(nullptr) == ZPM_INVALID_ARGUMENT);
}

TEST_CASE("errors carry a status and a message") {
  Ctx ctx;
  CHECK(std::string(zpm_last_error(ctx.c)).empty());
  double k = 0.0;
  CHECK(zpm_regularized_K(ctx.c, -1.0, &k) == ZPM_DOMAIN);
  CHECK(std::strlen(zpm_last_error(ctx.c)) > 0);
  CHECK(zpm_regularized_K(ctx.c, 1.0, &k) == ZPM_OK);
  CHECK(k == doctest::Approx(-M_PI * M_PI / 12));
  CHECK(std::string(zpm_last_error(ctx.c)).empty());

  zpm_integral r{};
  CHECK(zpm_constant_trig(ctx.c, "Q7", &r) == ZPM_INVALID_ARGUMENT);
  CHECK(zpm_constant_trig(ctx.c, nullptr, &r) == ZPM_INVALID_ARGUMENT);
  const double bad[] = {0.05, 0.1};
  CHECK(zpm_set_eps_schedule(ctx.c, bad, 2) == ZPM_INVALID_ARGUMENT);
  CHECK(zpm_set_tolerance(ctx.c, 1.0) == ZPM_INVALID_ARGUMENT);
  CHECK(zpm_set_constant_source(ctx.c, "tea leaves") == ZPM_INVALID_ARGUMENT);
  zpm_sphere s{};
  CHECK(zpm_load_material(ctx.c, "/nonexistent.json", &s) == ZPM_IO);
  zpm_freq_result f{};
  CHECK(zpm_freq_check(ctx.c, "transverse", 1.0, 1.0, 1.0, &f) == ZPM_INVALID_ARGUMENT);
}

TEST_CASE("constants, eta and predictions") {
  Ctx ctx;
  REQUIRE(zpm_set_constant_source(ctx.c, "trig") == ZPM_OK);
  zpm_integral r{};
  REQUIRE(zpm_constant_trig(ctx.c, "I1", &r) == ZPM_OK);
  CHECK(r.value == doctest::Approx(4.123).epsilon(1e-3));

  zpm_constant_set c{};
  REQUIRE(zpm_constants(ctx.c, &c) == ZPM_OK);
  CHECK(c.D == doctest::Approx(3 * M_PI / 16).epsilon(5e-3));
  CHECK(std::fabs(zpm_eta_of(&c)) == doctest::Approx(0.007909).epsilon(0.05));

  const zpm_sphere s = fegao3(ctx.c);
  const double E[] = {1, 0, 0}, B[] = {0, 1, 0};
  zpm_prediction* p = nullptr;
  REQUIRE(zpm_predict_me_sphere(ctx.c, &s, E, B, &p) == ZPM_OK);
  CHECK(std::string(zpm_prediction_model(p)) == "me_sphere");
  double v[3];
  zpm_prediction_velocity(p, v);
  CHECK(v[2] > 1e-21);
  CHECK(v[2] < 1e-19);
  CHECK(zpm_prediction_warning_count(p) > 0);
  CHECK(zpm_prediction_digest_count(p) > 5);
  const char* name = nullptr;
  const char* source = nullptr;
  double value = 0.0;
  CHECK(zpm_prediction_digest_entry(p, 0, &name, &value, &source) == ZPM_OK);
  CHECK(std::string(name) == "radius_m");
  CHECK(zpm_prediction_digest_entry(p, 1000, &name, &value, &source) == ZPM_INVALID_ARGUMENT);

  zpm_prediction* again = nullptr;
  REQUIRE(zpm_prediction_replay(ctx.c, p, &again) == ZPM_OK);
  double v2[3];
  zpm_prediction_velocity(again, v2);
  CHECK(std::memcmp(v, v2, sizeof v) == 0);
  zpm_prediction_destroy(again);
  zpm_prediction_destroy(p);

  zpm_sphere plain = s;
  plain.has_me_coupling = 0;
  p = nullptr;
  CHECK(zpm_predict_me_sphere(ctx.c, &plain, E, B, &p) == ZPM_INVALID_ARGUMENT);
  CHECK(p == nullptr);

  zpm_sphere chiral = s;
  chiral.has_verdet_v0 = chiral.has_chirality_g = 1;
  chiral.verdet_v0 = 1e-40;
  chiral.chirality_g = 1e-5;
  REQUIRE(zpm_predict_magneto_chiral(ctx.c, &chiral, B, &p) == ZPM_OK);
  CHECK(zpm_prediction_probably_wrong(p) == 1);
  zpm_prediction_destroy(p);

  const double vel[] = {1, 0, 0};
  REQUIRE(zpm_predict_moving_sphere(ctx.c, &s, vel, &p) == ZPM_OK);
  CHECK(zpm_prediction_mass_shift(p) != 0.0);
  zpm_prediction_destroy(p);

  const double chi[9] = {0, 1, 0, -1, 0, 0, 0, 0, 0};
  zpm_born_breakdown b{};
  REQUIRE(zpm_second_born(ctx.c, 1.0, 1.1, chi, &b) == ZPM_OK);
  CHECK(b.total[2] == doctest::Approx(b.contrib_0[2] + b.contrib_1[2] + b.contrib_2[2]));
  CHECK(zpm_second_born(ctx.c, 1.0, 2.0, chi, &b) == ZPM_DOMAIN);

  REQUIRE(zpm_predict_first_born(ctx.c, &s, chi, 0, 0.0, 1.0, &p) == ZPM_OK);
  double m[3];
  zpm_prediction_momentum(p, m);
  CHECK(m[0] == 0.0);
  CHECK(m[1] == 0.0);
  CHECK(m[2] == 0.0);
  zpm_prediction_destroy(p);
  CHECK(zpm_predict_first_born(ctx.c, &s, chi, 1, -1.0, 1.0, &p) == ZPM_INVALID_ARGUMENT);
}

TEST_CASE("frequency check, dipole and vacuum") {
  Ctx ctx;
  zpm_freq_result f{};
  REQUIRE(zpm_freq_check(ctx.c, "one_longitudinal", 1.0, 1.0, 1e-3, &f) == ZPM_OK);
  CHECK(f.closed_im == doctest::Approx(M_PI / 16));
  CHECK(f.rel_error < 1e-6);

  zpm_dipole_result d{};
  const double v[] = {1, 0, 0};
  REQUIRE(zpm_dipole(ctx.c, 1.0, 1.0, 1.0, NAN, v, &d) == ZPM_OK);
  CHECK(d.p_closed_form[0] == doctest::Approx(d.mass_shift));
  REQUIRE(zpm_dipole(ctx.c, 1e-29, 1e-29, NAN, 10.0, v, &d) == ZPM_OK);
  CHECK(d.hbar_omega0_eV == doctest::Approx(10.0));
  CHECK(d.p_rel_deviation < 1e-4);
  CHECK(zpm_dipole(ctx.c, 1e-29, 1e-29, d.gamma, 10.0, v, &d) == ZPM_OK);
  CHECK(zpm_dipole(ctx.c, 1e-29, 1e-29, 1.0, 10.0, v, &d) == ZPM_INVALID_ARGUMENT);
  CHECK(zpm_dipole(ctx.c, 1e-29, 2e-29, 1.0, NAN, v, &d) == ZPM_DOMAIN);

  double zero[3] = {1, 1, 1};
  zpm_empty_vacuum(zero);
  CHECK(zero[0] == 0.0);
  CHECK(zero[1] == 0.0);
  CHECK(zero[2] == 0.0);
  CHECK(zpm_empty_vacuum_grid(ctx.c, -1, 0.1, zero) == ZPM_INVALID_ARGUMENT);
}
