#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dwh/units.hpp"

using namespace dwh;

TEST_CASE("derive_trap natural units") {
  TrapConfig c{1.0, 1.0, 1.0, 1.0};
  // hbar-free relations: omega_z = 2 lambda eta / sqrt(m), V0 = lambda^2 eta^4 / 2
  TrapDerived d = derive_trap(c);
  CHECK(d.omega_z == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(d.V0 == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("derive_trap rejects non-positive fields") {
  TrapConfig c{1.0, 1.0, -1.0, 1.0};
  CHECK_THROWS_WITH_AS(derive_trap(c), "lambda: must be strictly positive",
                       domain_error);
  c = TrapConfig{0.0, 1.0, 1.0, 1.0};
  CHECK_THROWS_AS(derive_trap(c), domain_error);
}

TEST_CASE("Li-6 calibration hits omega_z = 2 pi x 1000 Hz") {
  const double omega_z = 2.0 * M_PI * 1000.0;
  const double a_z = std::sqrt(constants::hbar / (constants::mass_li6 * omega_z));
  TrapConfig c = calibrate_trap(constants::mass_li6, 3.0 * a_z, omega_z,
                                omega_z / 0.01);
  TrapDerived d = derive_trap(c);
  CHECK(d.omega_z == doctest::Approx(omega_z).epsilon(1e-12));
  // omega_z/omega_rho = 0.01 -> zeta = 0.1
  CHECK(d.zeta == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("calibrate_trap trivial inversion and linearity") {
  TrapConfig c = calibrate_trap(1.0, 1.0, 2.0, 1.0);
  CHECK(c.lambda == doctest::Approx(1.0).epsilon(1e-15));
  TrapConfig c4 = calibrate_trap(1.0, 1.0, 8.0, 1.0);
  CHECK(c4.lambda == doctest::Approx(4.0 * c.lambda).epsilon(1e-15));
}

TEST_CASE("calibrate/derive round trip on 1000 random inputs") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> mass(1e-27, 1e-25);
  std::uniform_real_distribution<double> eta(1e-7, 1e-5);
  std::uniform_real_distribution<double> omega(1e2, 1e5);
  for (int i = 0; i < 1000; ++i) {
    const double m = mass(rng), e = eta(rng), w = omega(rng);
    TrapConfig c = calibrate_trap(m, e, w, 2.0 * w);
    TrapDerived d = derive_trap(c);
    CHECK(std::abs(d.omega_z - w) <= 1e-12 * w);
  }
}

TEST_CASE("V0 scales as lambda^2, omega_z as lambda at fixed eta") {
  TrapConfig c{2.5e-26, 500.0, 3.0e-3, 2.0e-6};
  TrapDerived d1 = derive_trap(c);
  c.lambda *= 2.0;
  TrapDerived d2 = derive_trap(c);
  CHECK(d2.omega_z == doctest::Approx(2.0 * d1.omega_z).epsilon(1e-15));
  CHECK(d2.V0 == doctest::Approx(4.0 * d1.V0).epsilon(1e-15));
}

TEST_CASE("tight-binding is a flag, not an error") {
  // shallow barrier: V0 < hbar*omega_z
  const double omega_z = 2.0 * M_PI * 1000.0;
  const double a_z = std::sqrt(constants::hbar / (constants::mass_li6 * omega_z));
  TrapConfig c = calibrate_trap(constants::mass_li6, 1.0 * a_z, omega_z, omega_z);
  TrapDerived d = derive_trap(c);
  CHECK(!d.tight_binding);  // eta = a_z gives V0 = hbar omega_z / 8
  CHECK(d.V0 == doctest::Approx(constants::hbar * omega_z / 8.0).epsilon(1e-12));
}

TEST_CASE("unit system round trips to 1e-14") {
  UnitSystem u(constants::mass_li6, 2.0 * M_PI * 1000.0);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> x(1e-12, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double v = x(rng);
    CHECK(std::abs(u.length_to_si(u.length_to_osc(v)) - v) <= 1e-14 * v);
    CHECK(std::abs(u.energy_to_osc(u.energy_to_si(v)) - v) <= 1e-14 * v);
    CHECK(std::abs(u.time_to_si(u.time_to_osc(v)) - v) <= 1e-14 * v);
  }
}
