#pragma once

#include <Eigen/Dense>

#include "dwh/common.hpp"
#include "dwh/dvr.hpp"
#include "dwh/hubbard.hpp"
#include "dwh/potentials.hpp"

namespace dwh {

// Resolution knobs for the interaction quadrature; scale = 2 doubles every
// panel density (used by the convergence checks).
struct QuadratureOptions {
  int scale = 1;
};

// Transverse-reduced axial kernel
//   W(u) = (1/a_rho^2) Int_{|u|}^{sqrt((8 a_rho)^2+u^2)}
//            r exp(-(r^2-u^2)/(2 a_rho^2)) V(r) dr,
// the rho-integral of the appendix written in the separation variable so the
// short-range structure of V is resolved regardless of r0/a_rho. All inputs
// in oscillator units.
class TransverseKernel {
 public:
  TransverseKernel(const InteractionPotential& pot_osc, double a_rho_osc,
                   QuadratureOptions opts = {});
  double operator()(double u) const;
  double a_rho() const { return a_rho_; }
  double inner_scale() const { return inner_scale_; }
  double range() const { return range_; }

 private:
  const InteractionPotential* pot_;
  double a_rho_;
  double inner_scale_;  // sharpest potential feature
  double range_;        // |u| beyond which W vanishes
  int scale_;
};

// (1/a_rho^2) Int rho e^{-rho^2/(2 a_rho^2)}
//   V(sqrt(rho^2+(z1-z2)^2)) f1(z1) f3(z1) f2(z2) f4(z2) drho dz1 dz2
// for axial mode functions sharing the transverse ground state. Modes are
// grid functions on the solution grid, quadrature-normalized. Result in
// hbar*omega_z given oscillator-unit inputs.
double interaction_element(const Grid1D& grid, const Eigen::VectorXd& f1,
                           const Eigen::VectorXd& f2, const Eigen::VectorXd& f3,
                           const Eigen::VectorXd& f4,
                           const InteractionPotential& pot_osc,
                           double a_rho_osc, QuadratureOptions opts = {});

struct HubbardResult {
  HubbardParameters params;
  double U_ll = 0.0;
  double U_rr = 0.0;
};

// All four interaction coefficients plus J from the single-particle
// solution. The potential is given in SI units and rescaled internally.
HubbardResult hubbard_parameters(const SingleParticleSolution& sol,
                                 const InteractionPotential& pot_si,
                                 const TrapConfig& trap,
                                 QuadratureOptions opts = {});

// Contact closed form U_c = g/(2 pi a_rho^2) Int |psi_l|^4 dz,
// g = 4 pi hbar^2 a_s / m. a_s in SI; result in hbar*omega_z.
double contact_onsite_U(const SingleParticleSolution& sol, double a_s_si,
                        const TrapConfig& trap);

// Rescales an SI-unit potential to oscillator units (lengths in a_z,
// hbar = m = 1 so hbar^2/mu = 2 for an equal-mass pair).
InteractionPotential to_oscillator_units(const InteractionPotential& pot_si,
                                         const UnitSystem& units);

}  // namespace dwh
