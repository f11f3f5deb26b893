#pragma once

#include <vector>

#include "dwh/common.hpp"
#include "dwh/potentials.hpp"

namespace dwh {

// Relative motion of two atoms in an isotropic trap (omega_rho = omega_z),
// s-wave channel; exact center-of-mass separation.
struct RelativeMotionProblem {
  double omega = 0.0;         // rad/s
  double reduced_mass = 0.0;  // kg
  InteractionPotential potential;  // SI units
  double r_max_factor = 10.0;      // r_max = factor * sqrt(hbar/(mu omega))
  // Deep two-body states with E < -threshold * hbar^2/(2 mu r0^2) are
  // skipped; the reported state is the lowest trap-dressed one above that.
  double deep_threshold = 0.5;

  void validate() const;
};

struct PairSolution {
  double E_rel = 0.0;  // units hbar*omega
  std::vector<double> r;  // radial grid (units of b = sqrt(hbar/(mu omega)))
  std::vector<double> u;  // normalized reduced radial wavefunction
  int nodes = 0;
  double residual = 0.0;
};

PairSolution solve_relative_ground(const RelativeMotionProblem& problem);

enum class PairUDefinition { energy_shift, matrix_element };

struct PairU {
  double energy_shift = 0.0;    // E_rel - 3/2 hbar*omega
  double matrix_element = 0.0;  // <u|V|u>; NaN for the contact interaction
};

PairU onsite_U_from_pair(const PairSolution& solution,
                         const RelativeMotionProblem& problem);

}  // namespace dwh
