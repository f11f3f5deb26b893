#include "dwh/dvr.hpp"

#include <cmath>
#include <sstream>

namespace dwh {

void Grid1D::validate() const {
  if (n_points < 64) throw domain_error("n_points", "must be >= 64");
  if (!(z_max > z_min)) throw domain_error("z_max", "must exceed z_min");
  if (std::abs(z_max + z_min) > 1e-12 * (z_max - z_min))
    throw domain_error("z_min", "grid must be symmetric (z_max = -z_min)");
}

Eigen::VectorXd Grid1D::points() const {
  Eigen::VectorXd z(n_points);
  for (int i = 0; i < n_points; ++i) z[i] = point(i);
  return z;
}

double dw_potential_osc(double z_osc, double eta_osc) {
  const double d = z_osc * z_osc - eta_osc * eta_osc;
  return d * d / (8.0 * eta_osc * eta_osc);
}

Grid1D default_grid(const TrapConfig& trap) {
  const TrapDerived d = derive_trap(trap);
  const double eta = trap.eta / d.a_z;
  double half = 6.0 * eta;
  // Extend when the edge potential is shallow or the span cannot hold the
  // eta -> 0 single-well ground state.
  while (dw_potential_osc(half, eta) < 20.0 && half < 1e4) half *= 1.25;
  if (half < 6.0) half = 6.0;
  return Grid1D{-half, half, 513};
}

Hamiltonian1D build_hamiltonian_1d(const Grid1D& grid, const TrapConfig& trap) {
  grid.validate();
  const TrapDerived d = derive_trap(trap);
  const double eta = trap.eta / d.a_z;
  const int n = grid.n_points;
  const double dz = grid.spacing();

  Hamiltonian1D h;
  h.grid = grid;
  h.eta_osc = eta;
  h.matrix.resize(n, n);
  // Colbert-Miller uniform-grid sinc DVR for -1/2 d^2/dz^2 (hbar = m = 1).
  const double kin = 1.0 / (2.0 * dz * dz);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double t;
      if (i == j) {
        t = kin * (M_PI * M_PI / 3.0);
      } else {
        const int m = i - j;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        t = kin * sign * 2.0 / (static_cast<double>(m) * m);
      }
      h.matrix(i, j) = t;
      h.matrix(j, i) = t;
    }
  }
  for (int i = 0; i < n; ++i)
    h.matrix(i, i) += dw_potential_osc(grid.point(i), eta);

  if (dz > 0.25) {
    std::ostringstream os;
    os << "grid too coarse: dz = " << dz << " a_z exceeds a_z/4";
    h.warnings.push_back(os.str());
  }
  return h;
}

SingleParticleSolution solve_doublet(const Grid1D& grid, const TrapConfig& trap,
                                     int k) {
  if (k < 2) throw domain_error("k", "need at least the lowest doublet");
  Hamiltonian1D h = build_hamiltonian_1d(grid, trap);
  const int n = grid.n_points;
  const double dz = grid.spacing();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success)
    throw numeric_error("dense eigensolver failed on the 1D Hamiltonian");

  SingleParticleSolution sol;
  sol.grid = grid;
  sol.warnings = h.warnings;
  sol.energies = solver.eigenvalues().head(std::min(k, n));

  // Grid-quadrature normalization: sum psi^2 dz = 1.
  Eigen::VectorXd ps = solver.eigenvectors().col(0) / std::sqrt(dz);
  Eigen::VectorXd pa = solver.eigenvectors().col(1) / std::sqrt(dz);

  // Residual check on the doublet.
  for (int c = 0; c < 2; ++c) {
    const Eigen::VectorXd v = solver.eigenvectors().col(c);
    const double res =
        (h.matrix * v - solver.eigenvalues()[c] * v).norm();
    if (res > 1e-10 * h.matrix.norm()) {
      std::ostringstream os;
      os << "eigenpair residual " << res << " for state " << c;
      throw numeric_error(os.str());
    }
  }

  // Sign conventions: psi_s(0) > 0 and psi_l localized on the left.
  if (ps[n / 2] < 0) ps = -ps;
  Eigen::VectorXd pl = (ps + pa) / std::sqrt(2.0);
  double left_weight = 0.0;
  for (int i = 0; i < n / 2; ++i) left_weight += pl[i] * pl[i] * dz;
  if (left_weight < 0.5) {
    pa = -pa;
    pl = (ps + pa) / std::sqrt(2.0);
  }
  Eigen::VectorXd pr = (ps - pa) / std::sqrt(2.0);

  sol.psi_s = ps;
  sol.psi_a = pa;
  sol.psi_l = pl;
  sol.psi_r = pr;
  sol.doublet_gap = sol.energies[1] - sol.energies[0];
  sol.J = 0.5 * sol.doublet_gap;

  const TrapDerived d = derive_trap(trap);
  sol.tight_binding = d.tight_binding;
  if (!sol.tight_binding)
    sol.warnings.push_back(
        "V0 <= hbar*omega_z: outside the tight-binding regime, J is not a "
        "well separated tunneling scale");
  return sol;
}

double tunneling_matrix_element(const SingleParticleSolution& sol,
                                const Hamiltonian1D& h) {
  if (sol.grid.n_points != h.grid.n_points ||
      sol.grid.z_max != h.grid.z_max)
    throw domain_error("grid", "solution and Hamiltonian use different grids");
  const double dz = sol.grid.spacing();
  // -hbar J = Int psi_l H psi_r; with grid functions the quadrature weight
  // dz pairs with the eigenvector normalization 1/dz.
  const double element = sol.psi_l.dot(h.matrix * sol.psi_r) * dz;
  return -element;
}

TrapConfig calibrate_trap_to_tunneling(double mass, double omega_z,
                                       double omega_rho, double target_J_osc) {
  require_positive(target_J_osc, "target_J_osc");
  auto J_of_eta = [&](double eta_osc) {
    const double a_z = std::sqrt(constants::hbar / (mass * omega_z));
    TrapConfig c = calibrate_trap(mass, eta_osc * a_z, omega_z, omega_rho);
    SingleParticleSolution s = solve_doublet(default_grid(c), c);
    return s.J;
  };
  // J decreases monotonically with eta at fixed omega_z.
  double lo = 1.0, hi = 8.0;
  double Jlo = J_of_eta(lo), Jhi = J_of_eta(hi);
  if (!(Jlo >= target_J_osc && Jhi <= target_J_osc))
    throw numeric_error("tunneling target outside the calibration bracket");
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double Jm = J_of_eta(mid);
    if (Jm > target_J_osc)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-12) break;
  }
  const double eta_osc = 0.5 * (lo + hi);
  const double a_z = std::sqrt(constants::hbar / (mass * omega_z));
  return calibrate_trap(mass, eta_osc * a_z, omega_z, omega_rho);
}

}  // namespace dwh
