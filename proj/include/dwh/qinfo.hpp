#pragma once

#include <Eigen/Dense>

#include "dwh/common.hpp"
#include "dwh/dynamics.hpp"
#include "dwh/hubbard.hpp"

namespace dwh {

enum class Site { left, right };

// Diagonal of the single-mode reduced density matrix. Boson: occupation
// (0,1,2) of the chosen site; fermion: (empty, up, down, up+down).
Eigen::VectorXd reduced_spatial_density(const TwoSiteState& state, Site site);

// Von Neumann entropy (bits) of the single-mode reduced density matrix.
double spatial_entropy(const TwoSiteState& state);

// One-particle reduced density matrix, unit trace. Fermions: 4x4 over
// modes (L up, L down, R up, R down); bosons: 2x2 over (L, R).
Eigen::MatrixXcd rho1(const TwoSiteState& state);

// S_N^(1) = -Tr[rho1 log2 rho1].
double single_particle_entropy(const TwoSiteState& state);

// E(rho1) = S_N^(1) - 1 for fermions; = S_N^(1) for spinless bosons.
double entanglement_measure(const TwoSiteState& state);

// On-site number-statistics parameter (Mandel-like); closed amplitude form.
double q_parameter(const TwoSiteState& state, Site site);
// Same quantity from second-quantized matrix elements (dual route).
double q_parameter_operator(const TwoSiteState& state, Site site);

struct FluctuationReport {
  double dE_phi_F = 0.0;
  double dE_phi_B = 0.0;
  double dN = 0.0;
  double d_SQL_F = 0.0;
  double d_SQL_B = 0.0;
  double mean_W = 0.0;  // ground-state number difference, zero in a symmetric DW
};

// Closed-form ground-state (|a>) number and phase fluctuations.
FluctuationReport ground_state_fluctuations(const DerivedCouplings& c,
                                            double J);

// Wraps an eigenvector of the two-fermion (or two-boson) matrix as a state.
TwoSiteState eigenstate(Model model, const Eigen::Vector4d& fermion_vector);

// Full observable record for a state (dynamics + entropies + Q).
ObservableRecord observables(const TwoSiteState& state);

}  // namespace dwh
