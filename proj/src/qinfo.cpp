#include "dwh/qinfo.hpp"

#include <cmath>

namespace dwh {

namespace {

double xlog2x(double p) {
  if (p <= 0.0) return 0.0;
  return p * std::log2(p);
}

double entropy_bits(const Eigen::VectorXd& probs) {
  double s = 0.0;
  for (int i = 0; i < probs.size(); ++i) s -= xlog2x(std::max(probs[i], 0.0));
  return s;
}

}  // namespace

Eigen::VectorXd reduced_spatial_density(const TwoSiteState& state, Site site) {
  if (std::abs(state.norm2() - 1.0) > 1e-10)
    throw domain_error("state", "must be normalized");
  const auto& a = state.amplitudes;
  if (state.model == Model::boson3) {
    Eigen::VectorXd d(3);
    // occupation 0,1,2 of the site
    if (site == Site::left)
      d << std::norm(a[2]), std::norm(a[1]), std::norm(a[0]);
    else
      d << std::norm(a[0]), std::norm(a[1]), std::norm(a[2]);
    return d;
  }
  Eigen::VectorXd d(4);
  // (empty, up, down, up+down) of the site
  if (site == Site::left)
    d << std::norm(a[3]), std::norm(a[1]), std::norm(a[2]), std::norm(a[0]);
  else
    d << std::norm(a[0]), std::norm(a[2]), std::norm(a[1]), std::norm(a[3]);
  return d;
}

double spatial_entropy(const TwoSiteState& state) {
  return entropy_bits(reduced_spatial_density(state, Site::left));
}

Eigen::MatrixXcd rho1(const TwoSiteState& state) {
  if (std::abs(state.norm2() - 1.0) > 1e-10)
    throw domain_error("state", "must be normalized");
  const auto& a = state.amplitudes;
  using cplx = std::complex<double>;
  if (state.model == Model::boson3) {
    Eigen::MatrixXcd g(2, 2);
    const double nL = 2.0 * std::norm(a[0]) + std::norm(a[1]);
    const double nR = std::norm(a[1]) + 2.0 * std::norm(a[2]);
    const cplx coh =
        std::sqrt(2.0) * (std::conj(a[0]) * a[1] + std::conj(a[1]) * a[2]);
    g << nL, coh, std::conj(coh), nR;
    return g / 2.0;
  }
  // Fock states as ordered mode pairs (Lu Ld), (Lu Rd), (Ru Ld), (Ru Rd);
  // with this ordering all single-particle coherences come out with plus
  // signs and a Slater determinant gives entropy exactly 1.
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(4, 4);
  const double n_Lu = std::norm(a[0]) + std::norm(a[1]);
  const double n_Ld = std::norm(a[0]) + std::norm(a[2]);
  const double n_Ru = std::norm(a[2]) + std::norm(a[3]);
  const double n_Rd = std::norm(a[1]) + std::norm(a[3]);
  const cplx g_up = std::conj(a[2]) * a[0] + std::conj(a[3]) * a[1];  // <Ru+ Lu>
  const cplx g_dn = std::conj(a[1]) * a[0] + std::conj(a[3]) * a[2];  // <Rd+ Ld>
  g(0, 0) = n_Lu;
  g(1, 1) = n_Ld;
  g(2, 2) = n_Ru;
  g(3, 3) = n_Rd;
  g(0, 2) = std::conj(g_up);
  g(2, 0) = g_up;
  g(1, 3) = std::conj(g_dn);
  g(3, 1) = g_dn;
  return g / 2.0;
}

double single_particle_entropy(const TwoSiteState& state) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho1(state));
  return entropy_bits(es.eigenvalues());
}

double entanglement_measure(const TwoSiteState& state) {
  const double s = single_particle_entropy(state);
  const double e = (state.model == Model::fermion4) ? s - 1.0 : s;
  return (e < 0.0 && e > -1e-12) ? 0.0 : e;
}

double q_parameter(const TwoSiteState& state, Site site) {
  if (std::abs(state.norm2() - 1.0) > 1e-10)
    throw domain_error("state", "must be normalized");
  const auto& a = state.amplitudes;
  if (state.model == Model::fermion4) {
    // Q_l = Q_r = |c0|^2 |c3|^2 - |c1|^2 |c2|^2
    (void)site;
    return std::norm(a[0]) * std::norm(a[3]) - std::norm(a[1]) * std::norm(a[2]);
  }
  const double p0 = (site == Site::left) ? std::norm(a[0]) : std::norm(a[2]);
  const double p1 = std::norm(a[1]);
  return 2.0 * p0 - 4.0 * p0 * p0 - p1 * p1 - 4.0 * p0 * p1;
}

double q_parameter_operator(const TwoSiteState& state, Site site) {
  const auto& a = state.amplitudes;
  if (state.model == Model::boson3) {
    // N_site = diag(2,1,0) (left) or diag(0,1,2) (right) on [|2,0>,|1,1>,|0,2>]
    Eigen::Vector3d n;
    n = (site == Site::left) ? Eigen::Vector3d(2, 1, 0) : Eigen::Vector3d(0, 1, 2);
    double mean = 0.0, mean2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double p = std::norm(a[i]);
      mean += n[i] * p;
      mean2 += n[i] * n[i] * p;
    }
    return mean2 - mean * mean - mean;
  }
  // <N_up N_dn> - <N_up><N_dn> on the chosen site
  Eigen::Vector4d n_up, n_dn;
  if (site == Site::left) {
    n_up << 1, 1, 0, 0;
    n_dn << 1, 0, 1, 0;
  } else {
    n_up << 0, 0, 1, 1;
    n_dn << 0, 1, 0, 1;
  }
  double m_up = 0.0, m_dn = 0.0, m_both = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double p = std::norm(a[i]);
    m_up += n_up[i] * p;
    m_dn += n_dn[i] * p;
    m_both += n_up[i] * n_dn[i] * p;
  }
  return m_both - m_up * m_dn;
}

FluctuationReport ground_state_fluctuations(const DerivedCouplings& c,
                                            double J) {
  const double X = c.U_minus + c.Omega;
  const double Jm = c.J_minus;
  FluctuationReport r;
  const double denJ = 16.0 * J * J + X * X;
  r.dE_phi_F = 2.0 * std::sqrt(2.0) * J * std::sqrt(8.0 * J * J + X * X) / denJ;
  {
    const double s2J = std::sqrt(2.0) * J;
    const double frac = 32.0 * J * J * (X + s2J) * (X + s2J) / (denJ * denJ);
    r.dE_phi_B = std::sqrt(std::max(0.0, 1.0 - frac));
  }
  // Number-difference fluctuation; prefactor fixed to 2J so the printed
  // limits 1/(2 sqrt2), 0 and 1/2 all hold (see README notes on units).
  r.dN = 2.0 * J / std::sqrt(denJ);
  const double denJm = 16.0 * Jm * Jm + X * X;
  r.d_SQL_F = std::abs(16.0 * Jm * Jm / denJm);
  r.d_SQL_B =
      std::abs(4.0 * std::sqrt(2.0) * Jm * (X - 2.0 * std::sqrt(2.0) * Jm) /
               denJm);
  r.mean_W = 0.0;
  return r;
}

TwoSiteState eigenstate(Model model, const Eigen::Vector4d& v) {
  TwoSiteState s;
  s.model = model;
  s.time = 0.0;
  if (model == Model::fermion4) {
    s.amplitudes.resize(4);
    for (int i = 0; i < 4; ++i) s.amplitudes[i] = v[i];
  } else {
    // basis map: |ud,0> -> |2,0>, (|u,d>+|d,u>)/sqrt2 -> |1,1>, |0,ud> -> |0,2>
    if (std::abs(v[1] - v[2]) > 1e-12)
      throw domain_error("vector",
                         "no boson image: singlet-sector component present");
    s.amplitudes.resize(3);
    s.amplitudes[0] = v[0];
    s.amplitudes[1] = std::sqrt(2.0) * v[1];
    s.amplitudes[2] = v[3];
  }
  const double n = std::sqrt(s.norm2());
  if (n == 0.0) throw domain_error("vector", "zero vector");
  s.amplitudes /= n;
  return s;
}

ObservableRecord observables(const TwoSiteState& state) {
  ObservableRecord r;
  const Occupancy o = occupancy(state);
  r.rho_s = o.rho_s;
  r.rho_d = o.rho_d;
  const TunnelingProbabilities p = tunneling_from_amplitudes(state);
  r.P_pair = p.P_pair;
  r.P_single = p.P_single;
  r.P_none = p.P_none;
  r.S_spatial = spatial_entropy(state);
  r.E_rho1 = entanglement_measure(state);
  r.Q_left = q_parameter(state, Site::left);
  r.Q_right = q_parameter(state, Site::right);
  return r;
}

}  // namespace dwh
