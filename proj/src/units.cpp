#include "dwh/units.hpp"

#include <cmath>

namespace dwh {

void TrapConfig::validate() const {
  require_positive(mass, "mass");
  require_positive(omega_rho, "omega_rho");
  require_positive(lambda, "lambda");
  require_positive(eta, "eta");
}

TrapDerived derive_trap(const TrapConfig& config) {
  config.validate();
  TrapDerived d;
  d.omega_z = 2.0 * config.lambda * config.eta / std::sqrt(config.mass);
  d.V0 = 0.5 * config.lambda * config.lambda * std::pow(config.eta, 4);
  d.a_z = std::sqrt(constants::hbar / (config.mass * d.omega_z));
  d.a_rho = std::sqrt(constants::hbar / (config.mass * config.omega_rho));
  d.zeta = std::sqrt(d.omega_z / config.omega_rho);
  d.tight_binding = d.V0 > constants::hbar * d.omega_z;
  return d;
}

TrapConfig calibrate_trap(double mass, double eta, double target_omega_z,
                          double omega_rho) {
  require_positive(mass, "mass");
  require_positive(eta, "eta");
  require_positive(target_omega_z, "target_omega_z");
  require_positive(omega_rho, "omega_rho");
  TrapConfig c;
  c.mass = mass;
  c.eta = eta;
  c.omega_rho = omega_rho;
  c.lambda = target_omega_z * std::sqrt(mass) / (2.0 * eta);
  return c;
}

UnitSystem::UnitSystem(double mass, double omega_z) : omega_z_(omega_z) {
  require_positive(mass, "mass");
  require_positive(omega_z, "omega_z");
  a_z_ = std::sqrt(constants::hbar / (mass * omega_z));
  hbar_omega_ = constants::hbar * omega_z;
}

}  // namespace dwh
