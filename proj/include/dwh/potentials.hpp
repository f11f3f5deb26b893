#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "dwh/common.hpp"

namespace dwh {

// Finite-range model potential for positive scattering length. Three
// parameters (a_s, r0, Lambda); kappa parameterizes the s-wave binding
// energy E_b = -hbar^2 kappa^2 / (2 mu) and maps to Lambda via
// kappa = (1+alpha)(1+Lambda) / (r0 (1-Lambda)).
//
// Lengths and hbar^2/mu are in one consistent unit system chosen by the
// caller (SI, or oscillator units with hbar2_over_mu = 2 for equal-mass
// pairs).
struct JostKohnPositive {
  double a_s = 0.0;
  double r0 = 0.0;
  double Lambda = 0.0;
  double hbar2_over_mu = 0.0;
  // derived
  double alpha = 0.0;
  double beta = 0.0;
  double kappa = 0.0;
  double v_amp = 0.0;  // 4 hbar^2 alpha / (mu r0^2)

  static JostKohnPositive from_lambda(double a_s, double r0, double Lambda,
                                      double hbar2_over_mu);
  static JostKohnPositive from_kappa(double a_s, double r0, double kappa,
                                     double hbar2_over_mu);
};

// Purely attractive companion potential for negative scattering length.
struct JostKohnNegative {
  double a_s = 0.0;
  double r0 = 0.0;
  double hbar2_over_mu = 0.0;
  // derived
  double alpha = 0.0;  // > 1 here
  double beta = 0.0;

  JostKohnNegative() = default;
  JostKohnNegative(double a_s, double r0, double hbar2_over_mu);
};

// Regularized contact interaction. Never evaluated pointwise; consumers use
// the coupling g = 2 pi (hbar^2/mu) a_s (= 4 pi hbar^2 a_s / m_atom) or the
// Bethe-Peierls boundary condition. a_s = 0 means no interaction.
struct ContactInteraction {
  double a_s = 0.0;
  double hbar2_over_mu = 0.0;

  double g() const { return 2.0 * M_PI * hbar2_over_mu * a_s; }
};

using InteractionPotential =
    std::variant<JostKohnPositive, JostKohnNegative, ContactInteraction>;

// Inverts Eq.-(3)-style kappa(Lambda) for Lambda; Lambda in (-1, 1).
double lambda_from_kappa(double kappa, double a_s, double r0);

double evaluate(const JostKohnPositive& p, double r);
double evaluate(const JostKohnNegative& p, double r);
// Contact has no pointwise value; throws domain_error.
double evaluate(const InteractionPotential& p, double r);

// Largest separation beyond which |V| is negligible (used by quadratures).
double outer_range(const InteractionPotential& p);

struct ScatteringFit {
  double a_s_fit = 0.0;
  double r0_fit = 0.0;
  std::vector<double> k, delta, kcotdelta;
};

// Numerov integration of the s-wave radial equation, two-point matching to
// free solutions at r = 25 max(r0, |a_s|), weighted quadratic fit of
// k cot(delta) = -1/a + (r_eff/2) k^2 + c k^4 over the supplied momenta.
ScatteringFit verify_scattering(const InteractionPotential& p,
                                const std::vector<double>& k_grid);

// Momenta in the low-energy window k*r0 < 0.1 and k*|a_s| small.
std::vector<double> default_k_grid(const InteractionPotential& p, int n = 8);

}  // namespace dwh
