#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dwh/common.hpp"
#include "dwh/hubbard.hpp"

namespace dwh {

enum class Model { fermion4, boson3 };

enum class InitialCondition {
  same_site,            // both particles start in the left well
  split_sites,          // (|u,d> + |d,u>)/sqrt2, or |1,1> for bosons
  split_antisymmetric,  // (|u,d> - |d,u>)/sqrt2; stationary (fermions only)
};

// Complex amplitudes on the frozen Fock bases; time in units 1/J.
struct TwoSiteState {
  Model model = Model::fermion4;
  Eigen::VectorXcd amplitudes;
  double time = 0.0;

  int dim() const { return model == Model::fermion4 ? 4 : 3; }
  double norm2() const { return amplitudes.squaredNorm(); }
};

TwoSiteState initial_state(Model model, InitialCondition init);

// Closed-form evolution from the two printed initial conditions.
TwoSiteState analytic_evolve(Model model, InitialCondition init,
                             const DerivedCouplings& c, double t);

// Exact propagation via eigendecomposition of the (Hermitian) matrix.
std::vector<Eigen::VectorXcd> numeric_evolve(const Eigen::MatrixXd& H,
                                             const Eigen::VectorXcd& psi0,
                                             const std::vector<double>& times);

struct Occupancy {
  double rho_s = 0.0;  // one particle in each well
  double rho_d = 0.0;  // both particles in one well
};

Occupancy occupancy(const TwoSiteState& state);

struct TunnelingProbabilities {
  double P_pair = 0.0;
  double P_single = 0.0;
  double P_none = 0.0;
};

// Closed form for the same-site start. The beat phase is the exact
// W - U_bar/2 (reduces to U_minus/2 when K = 0, the printed case); the
// result equals the |amplitude|^2 route for all parameters.
TunnelingProbabilities tunneling_probabilities(const DerivedCouplings& c,
                                               double t);

// Occupancy-class probabilities from amplitudes (pair = both right, etc. in
// the left-start labeling); equals tunneling_probabilities for the
// same-site start.
TunnelingProbabilities tunneling_from_amplitudes(const TwoSiteState& state);

struct ObservableRecord {
  double rho_s = 0.0, rho_d = 0.0;
  double P_pair = 0.0, P_single = 0.0, P_none = 0.0;
  double S_spatial = 0.0;
  double E_rho1 = 0.0;
  double Q_left = 0.0, Q_right = 0.0;
};

struct ObservableSeries {
  std::vector<double> times;  // units 1/J
  std::vector<ObservableRecord> records;
};

// Trapezoid time average of a sampled scalar series on [0, T_max].
double time_average(const std::vector<double>& times,
                    const std::vector<double>& values, double T_max);

}  // namespace dwh
