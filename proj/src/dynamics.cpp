#include "dwh/dynamics.hpp"

#include <cmath>

namespace dwh {

namespace {

using cplx = std::complex<double>;
constexpr cplx I_unit{0.0, 1.0};

// sin(x)/y with the y -> 0 limit handled by the caller's pairing x = y*t/2.
double sin_over(double omega, double t) {
  if (omega == 0.0) return 0.5 * t;
  return std::sin(0.5 * omega * t) / omega;
}

}  // namespace

TwoSiteState initial_state(Model model, InitialCondition init) {
  TwoSiteState s;
  s.model = model;
  s.time = 0.0;
  if (model == Model::fermion4) {
    s.amplitudes = Eigen::VectorXcd::Zero(4);
    switch (init) {
      case InitialCondition::same_site:
        s.amplitudes[0] = 1.0;
        break;
      case InitialCondition::split_sites:
        s.amplitudes[1] = 1.0 / std::sqrt(2.0);
        s.amplitudes[2] = 1.0 / std::sqrt(2.0);
        break;
      case InitialCondition::split_antisymmetric:
        s.amplitudes[1] = 1.0 / std::sqrt(2.0);
        s.amplitudes[2] = -1.0 / std::sqrt(2.0);
        break;
    }
  } else {
    s.amplitudes = Eigen::VectorXcd::Zero(3);
    if (init == InitialCondition::same_site)
      s.amplitudes[0] = 1.0;
    else if (init == InitialCondition::split_sites)
      s.amplitudes[1] = 1.0;
    else
      throw domain_error("init",
                         "antisymmetric split start exists only for fermions");
  }
  return s;
}

TwoSiteState analytic_evolve(Model model, InitialCondition init,
                             const DerivedCouplings& c, double t) {
  if (t < 0.0) throw domain_error("t", "time must be non-negative");
  const double Om = c.Omega;
  const double cosO = std::cos(0.5 * Om * t);
  const double sO = sin_over(Om, t);  // sin(Om t/2)/Om
  const cplx phase_bar = std::exp(-I_unit * (0.5 * c.U_bar * t));
  const cplx phase_W = std::exp(-I_unit * (c.W * t));
  // cos(Om t/2) -/+ i (U_minus/Om) sin(Om t/2)
  const cplx block_minus = cosO - I_unit * c.U_minus * sO;
  const cplx block_plus = cosO + I_unit * c.U_minus * sO;

  TwoSiteState s;
  s.model = model;
  s.time = t;

  if (model == Model::fermion4) {
    s.amplitudes.resize(4);
    if (init == InitialCondition::same_site) {
      const cplx c0 = 0.5 * phase_W + 0.5 * phase_bar * block_minus;
      const cplx c1 = 2.0 * I_unit * c.J_minus * sO * phase_bar;
      s.amplitudes << c0, c1, c1, -0.5 * phase_W + 0.5 * phase_bar * block_minus;
    } else if (init == InitialCondition::split_sites) {
      const cplx c0 = 2.0 * std::sqrt(2.0) * I_unit * c.J_minus * sO * phase_bar;
      const cplx c1 = phase_bar * block_plus / std::sqrt(2.0);
      s.amplitudes << c0, c1, c1, c0;
    } else {
      // |0> is the eigenvector |d>; pure phase evolution at E_d = U_i - K.
      const double E_d = c.W - c.U_minus;  // U_i - K
      const cplx ph = std::exp(-I_unit * (E_d * t)) / std::sqrt(2.0);
      s.amplitudes << 0.0, ph, -ph, 0.0;
    }
  } else {
    s.amplitudes.resize(3);
    if (init == InitialCondition::same_site) {
      const cplx c0 = 0.5 * phase_W + 0.5 * phase_bar * block_minus;
      const cplx c1 = 2.0 * std::sqrt(2.0) * I_unit * c.J_minus * sO * phase_bar;
      s.amplitudes << c0, c1, -0.5 * phase_W + 0.5 * phase_bar * block_minus;
    } else if (init == InitialCondition::split_sites) {
      const cplx c0 = 2.0 * std::sqrt(2.0) * I_unit * c.J_minus * sO * phase_bar;
      s.amplitudes << c0, phase_bar * block_plus, c0;
    } else {
      throw domain_error("init",
                         "antisymmetric split start exists only for fermions");
    }
  }
  return s;
}

std::vector<Eigen::VectorXcd> numeric_evolve(const Eigen::MatrixXd& H,
                                             const Eigen::VectorXcd& psi0,
                                             const std::vector<double>& times) {
  if (!H.isApprox(H.transpose(), 1e-12))
    throw domain_error("H", "must be symmetric");
  if (std::abs(psi0.squaredNorm() - 1.0) > 1e-10)
    throw domain_error("psi0", "must be normalized");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success)
    throw numeric_error("eigendecomposition failed in numeric_evolve");
  const Eigen::MatrixXd& V = es.eigenvectors();
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::VectorXcd coeff = V.transpose() * psi0;
  std::vector<Eigen::VectorXcd> out;
  out.reserve(times.size());
  for (double t : times) {
    Eigen::VectorXcd phased(coeff.size());
    for (int i = 0; i < coeff.size(); ++i)
      phased[i] = coeff[i] * std::exp(cplx(0.0, -lam[i] * t));
    out.push_back(V * phased);
  }
  return out;
}

Occupancy occupancy(const TwoSiteState& state) {
  if (std::abs(state.norm2() - 1.0) > 1e-10)
    throw domain_error("state", "must be normalized");
  Occupancy o;
  const auto& a = state.amplitudes;
  if (state.model == Model::fermion4) {
    o.rho_s = std::norm(a[1]) + std::norm(a[2]);
    o.rho_d = std::norm(a[0]) + std::norm(a[3]);
  } else {
    o.rho_s = std::norm(a[1]);
    o.rho_d = std::norm(a[0]) + std::norm(a[2]);
  }
  return o;
}

TunnelingProbabilities tunneling_probabilities(const DerivedCouplings& c,
                                               double t) {
  const double Om = c.Omega;
  const double u = (Om == 0.0) ? 0.0 : c.U_minus / Om;
  const double sO = sin_over(Om, t);
  const double sin_half = std::sin(0.5 * Om * t);
  const double cos_half = std::cos(0.5 * Om * t);
  // Exact beat phase; equals the printed U_minus t/2 when K = 0.
  const double theta = (c.W - 0.5 * c.U_bar) * t;
  TunnelingProbabilities p;
  p.P_pair = 0.25 * (2.0 - (1.0 - u * u) * sin_half * sin_half -
                     2.0 * std::cos(theta) * cos_half -
                     2.0 * u * std::sin(theta) * sin_half);
  p.P_single = 8.0 * c.J_minus * c.J_minus * sO * sO;
  p.P_none = 1.0 - p.P_pair - p.P_single;
  return p;
}

TunnelingProbabilities tunneling_from_amplitudes(const TwoSiteState& state) {
  TunnelingProbabilities p;
  const auto& a = state.amplitudes;
  if (state.model == Model::fermion4) {
    p.P_pair = std::norm(a[3]);
    p.P_single = std::norm(a[1]) + std::norm(a[2]);
    p.P_none = std::norm(a[0]);
  } else {
    p.P_pair = std::norm(a[2]);
    p.P_single = std::norm(a[1]);
    p.P_none = std::norm(a[0]);
  }
  return p;
}

double time_average(const std::vector<double>& times,
                    const std::vector<double>& values, double T_max) {
  if (times.size() != values.size() || times.size() < 2)
    throw domain_error("series", "need matching times/values with >= 2 samples");
  double acc = 0.0;
  double covered = 0.0;
  for (size_t i = 1; i < times.size(); ++i) {
    if (times[i] > T_max + 1e-12) break;
    const double dt = times[i] - times[i - 1];
    if (dt <= 0.0) throw domain_error("series", "times must increase");
    acc += 0.5 * (values[i] + values[i - 1]) * dt;
    covered = times[i];
  }
  if (covered < T_max * (1.0 - 1e-9))
    throw numeric_error("series does not cover [0, T_max]");
  return acc / covered;
}

}  // namespace dwh
