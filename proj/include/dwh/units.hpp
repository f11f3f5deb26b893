#pragma once

#include "dwh/common.hpp"

namespace dwh {

// Double-well trap V(r) = 1/2 m w_rho^2 rho^2 + 1/2 lambda^2 (z^2 - eta^2)^2,
// wells at z = +-eta, barrier V0 = 1/2 lambda^2 eta^4.
struct TrapConfig {
  double mass = 0.0;        // kg
  double omega_rho = 0.0;   // rad/s
  double lambda = 0.0;      // sqrt(J)/m^2, axial quartic strength
  double eta = 0.0;         // m, well minimum position

  void validate() const;
};

// Quantities derived from TrapConfig (SI).
struct TrapDerived {
  double omega_z = 0.0;  // rad/s, harmonic frequency at the well minima
  double V0 = 0.0;       // J, barrier height
  double a_z = 0.0;      // m, axial oscillator length
  double a_rho = 0.0;    // m, radial oscillator length
  double zeta = 0.0;     // sqrt(omega_z/omega_rho)
  bool tight_binding = false;  // V0 > hbar*omega_z
};

TrapDerived derive_trap(const TrapConfig& config);

// Inverts omega_z = 2*lambda*eta/sqrt(m) for lambda at fixed eta.
TrapConfig calibrate_trap(double mass, double eta, double target_omega_z,
                          double omega_rho);

// Conversion between SI and oscillator units (hbar = m = omega_z = 1).
// Lengths scale with a_z, energies with hbar*omega_z, times with 1/omega_z.
class UnitSystem {
 public:
  UnitSystem(double mass, double omega_z);

  double length_to_osc(double si) const { return si / a_z_; }
  double length_to_si(double osc) const { return osc * a_z_; }
  double energy_to_osc(double si) const { return si / hbar_omega_; }
  double energy_to_si(double osc) const { return osc * hbar_omega_; }
  double time_to_osc(double si) const { return si * omega_z_; }
  double time_to_si(double osc) const { return osc / omega_z_; }
  double frequency_to_osc(double si) const { return si / omega_z_; }
  double frequency_to_si(double osc) const { return osc * omega_z_; }

  double a_z() const { return a_z_; }
  double hbar_omega() const { return hbar_omega_; }
  double omega_z() const { return omega_z_; }

 private:
  double omega_z_;
  double a_z_;
  double hbar_omega_;
};

}  // namespace dwh
