#pragma once

#include <Eigen/Dense>

#include "dwh/common.hpp"
#include "dwh/units.hpp"

namespace dwh {

// Uniform symmetric grid, coordinates in oscillator units (lengths in a_z).
struct Grid1D {
  double z_min = 0.0;
  double z_max = 0.0;
  int n_points = 0;

  void validate() const;
  double spacing() const { return (z_max - z_min) / (n_points - 1); }
  double point(int i) const { return z_min + i * spacing(); }
  Eigen::VectorXd points() const;
};

// Default grid: z in [-6 eta, 6 eta], extended when the edge potential is
// below 20 hbar*omega_z or the span does not cover the single-well ground
// state; 513 points.
Grid1D default_grid(const TrapConfig& trap);

// Axial double-well potential in oscillator units.
double dw_potential_osc(double z_osc, double eta_osc);

struct Hamiltonian1D {
  Eigen::MatrixXd matrix;  // units hbar*omega_z
  Grid1D grid;
  double eta_osc = 0.0;
  Warnings warnings;
};

// Sinc-DVR (Colbert-Miller) kinetic rule plus the diagonal potential.
Hamiltonian1D build_hamiltonian_1d(const Grid1D& grid, const TrapConfig& trap);

struct SingleParticleSolution {
  Eigen::VectorXd energies;          // lowest k eigenvalues, hbar*omega_z
  Eigen::VectorXd psi_s, psi_a;      // doublet, grid-quadrature normalized
  Eigen::VectorXd psi_l, psi_r;      // localized combinations
  Grid1D grid;
  double J = 0.0;                    // tunneling, units omega_z
  double doublet_gap = 0.0;          // E_a - E_s, units hbar*omega_z
  bool tight_binding = false;
  Warnings warnings;
};

SingleParticleSolution solve_doublet(const Grid1D& grid, const TrapConfig& trap,
                                     int k = 2);

// -hbar J = Int dz psi_l H1 psi_r, evaluated on the grid. Returns J in
// units of omega_z.
double tunneling_matrix_element(const SingleParticleSolution& sol,
                                const Hamiltonian1D& h);

// Finds eta (in a_z) such that the solved J matches target_J_osc (units of
// omega_z); lambda then follows from omega_z. Used by the paper-style
// presets (omega_z and J given, trap shape implied).
TrapConfig calibrate_trap_to_tunneling(double mass, double omega_z,
                                       double omega_rho, double target_J_osc);

}  // namespace dwh
