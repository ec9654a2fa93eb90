#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "zpm/error.hpp"
#include "zpm/units.hpp"

using namespace zpm;

TEST_CASE("SI to Gaussian conversions") {
  CHECK(to_gaussian({1.0, Dimension::length}).value == doctest::Approx(100.0));
  CHECK(to_gaussian({1.0, Dimension::energy}).value == doctest::Approx(1e7));
  CHECK(to_gaussian({1.0, Dimension::momentum}).value == doctest::Approx(1e5));
  CHECK(to_gaussian({1000.0, Dimension::mass_density}).value == doctest::Approx(1.0));
  CHECK(to_gaussian({0.0, Dimension::action}).value == 0.0);
  CHECK(to_gaussian({3.0, Dimension::velocity}).dim == Dimension::velocity);
  CHECK(to_gaussian({PhysicalConstants::hbar_si, Dimension::action}).value ==
        doctest::Approx(PhysicalConstants::hbar_gauss).epsilon(1e-14));
  CHECK(to_gaussian({PhysicalConstants::c0_si, Dimension::velocity}).value ==
        doctest::Approx(PhysicalConstants::c0_gauss).epsilon(1e-14));
}

TEST_CASE("round trips are the identity") {
  for (const char* name : {"dimensionless", "length", "mass", "time", "energy", "action",
                           "momentum", "velocity", "mass_density", "wavenumber",
                           "angular_frequency"}) {
    const Dimension d = dimension_from_string(name);
    CHECK(to_string(d) == name);
    for (double v : {1e-30, -2.5, 1.0, 7.3e12}) {
      const double back = to_si(to_gaussian({v, d})).value;
      CHECK(std::fabs(back - v) <= 1e-12 * std::fabs(v));
    }
  }
}

TEST_CASE("unknown dimensions are rejected") {
  CHECK_THROWS_AS(dimension_from_string("furlong"), Error);
  try {
    dimension_from_string("furlong");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_input);
  }
}

TEST_CASE("s0_vector") {
  FieldConfig f;
  f.E0 = {1, 0, 0};
  f.B0 = {0, 1, 0};
  CHECK(s0_vector(f) == Vec3{0, 0, 1});
  f.E0 = {1, 2, 0};
  f.B0 = {0, 0, 3};
  CHECK(s0_vector(f) == Vec3{6, -3, 0});
  f.B0 = {2, 4, 0};
  CHECK(s0_vector(f) == Vec3{0, 0, 0});
  FieldConfig g;
  g.E0 = {0.3, -1.2, 2.0};
  g.B0 = {1.1, 0.4, -0.7};
  FieldConfig swapped;
  swapped.E0 = g.B0;
  swapped.B0 = g.E0;
  const Vec3 a = s0_vector(g);
  const Vec3 b = s0_vector(swapped);
  for (int i = 0; i < 3; ++i) CHECK(a[i] == doctest::Approx(-b[i]));
}

TEST_CASE("field velocity limit") {
  FieldConfig f;
  f.velocity = {0.009 * PhysicalConstants::c0_si, 0, 0};
  CHECK_NOTHROW(f.validate());
  f.velocity = {0.011 * PhysicalConstants::c0_si, 0, 0};
  CHECK_THROWS_AS(f.validate(), Error);
}

TEST_CASE("material JSON") {
  const auto m = material_from_json(R"({"epsilon": 2, "mass_density_kg_m3": 4500, "me_coupling": 1e-4})");
  CHECK(m.epsilon == 2.0);
  CHECK(m.mass_density == 4500.0);
  REQUIRE(m.me_coupling);
  CHECK(*m.me_coupling == 1e-4);
  CHECK_FALSE(m.verdet_v0);

  const auto again = material_from_json(material_to_json(m));
  CHECK(again.epsilon == m.epsilon);
  CHECK(*again.me_coupling == *m.me_coupling);

  CHECK_THROWS_AS(material_from_json(R"({"epsilon": 2, "mass_density_kg_m3": 1, "colour": 3})"), Error);
  CHECK_THROWS_AS(material_from_json(R"({"epsilon": 2})"), Error);
  CHECK_THROWS_AS(material_from_json(R"({"epsilon": "two", "mass_density_kg_m3": 1})"), Error);
  CHECK_THROWS_AS(material_from_json(R"({"epsilon": 2, "mass_density_kg_m3": -1})"), Error);
  CHECK_THROWS_AS(material_from_json("[1, 2]"), Error);
  CHECK_THROWS_AS(material_from_json("{not json"), Error);
}

TEST_CASE("material files") {
  try {
    load_material("/nonexistent/material.json");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io);
  }
  const auto m = load_material(ZPM_DATA_DIR "/fegao3.json");
  CHECK(m.epsilon - 1.0 == doctest::Approx(1.0));
  CHECK(m.mass_density == 4500.0);
  CHECK(load_material(ZPM_DATA_DIR "/generic_dielectric.json").epsilon >= 1.0);
}

TEST_CASE("sphere") {
  SphereSpec s;
  s.radius_a = 2.0;
  s.material.mass_density = 3.0;
  CHECK(s.volume() == doctest::Approx(32.0 * M_PI / 3.0));
  CHECK(s.mass() == doctest::Approx(32.0 * M_PI));
  s.radius_a = 0.0;
  CHECK_THROWS_AS(s.validate(), Error);
}
