#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>

#include "dwh/common.hpp"

namespace dwh {

// Hubbard couplings in units of hbar*omega_z (J in omega_z). U is on-site,
// U_i inter-site density-density, I partial exchange, K exchange/pair
// hopping.
struct HubbardParameters {
  double J = 0.0;
  double U = 0.0;
  double U_i = 0.0;
  double I = 0.0;
  double K = 0.0;
  std::string provenance;  // trap/potential/grid description
};

// Frozen basis orderings; every amplitude index downstream refers to these.
struct TwoFermionBasis {
  static constexpr int dim = 4;
  static constexpr std::array<const char*, 4> labels = {
      "|ud,0>", "|u,d>", "|d,u>", "|0,ud>"};
};

struct TwoBosonBasis {
  static constexpr int dim = 3;
  static constexpr std::array<const char*, 3> labels = {"|2,0>", "|1,1>",
                                                        "|0,2>"};
};

// Combinations that diagonalize the two-site problem.
struct DerivedCouplings {
  double J_minus = 0.0;  // J - I
  double U_bar = 0.0;    // U + U_i + 2K
  double U_plus = 0.0;   // U + U_i
  double U_minus = 0.0;  // U - U_i
  double Omega = 0.0;    // sqrt(U_minus^2 + 16 J_minus^2)
  double W = 0.0;        // U - K

  static DerivedCouplings from(const HubbardParameters& p);
};

Eigen::Matrix4d h_two_fermion(const HubbardParameters& p);
Eigen::Matrix3d h_two_boson(const HubbardParameters& p);
Eigen::Matrix4d h_three_boson(const HubbardParameters& p);
Eigen::Matrix2d h_three_fermion(const HubbardParameters& p);

// Bell-like spatial states in the fermionic basis ordering.
Eigen::Vector4d bell_plus();   // (|ud,0> + |0,ud>)/sqrt2
Eigen::Vector4d bell_minus();  // (|ud,0> - |0,ud>)/sqrt2
Eigen::Vector4d bell_zero();   // (|u,d> - |d,u>)/sqrt2
Eigen::Vector4d bell_one();    // (|u,d> + |d,u>)/sqrt2

struct SpectrumResult {
  // ascending: E_a <= E_b,E_d <= E_c ordering holds for the generic case;
  // eigenvalues stores {E_a, E_b, E_c, E_d} by analytic label.
  double E_a = 0.0, E_b = 0.0, E_c = 0.0, E_d = 0.0;
  Eigen::Vector4d a, b, c, d;  // eigenvectors in the fermion basis
  bool degenerate_J_minus = false;
};

// Closed-form eigensystem of the two-fermion matrix; the boson spectrum is
// {E_a, E_b, E_c} with matching vectors under the basis map.
SpectrumResult analytic_spectrum(const HubbardParameters& p);

}  // namespace dwh
