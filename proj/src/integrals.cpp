#include "dwh/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dwh {

namespace {

// Composite Simpson over [a, b] with n intervals (n made even).
template <class F>
double simpson(F&& f, double a, double b, int n) {
  if (b <= a) return 0.0;
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

struct PotentialScales {
  double inner;  // sharpest radial feature
  double outer;  // decay range
};

PotentialScales scales_of(const InteractionPotential& p) {
  return std::visit(
      [](const auto& pot) -> PotentialScales {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, JostKohnNegative>) {
          return {pot.r0 / (2.0 * pot.beta), pot.r0 * (30.0 / pot.beta + 1.0)};
        } else if constexpr (std::is_same_v<T, JostKohnPositive>) {
          const double inner = pot.r0 / (2.0 * pot.beta);
          const double rate = std::max(2.0 * (1.0 - pot.alpha), 1e-6);
          return {inner, pot.r0 * 40.0 / rate};
        } else {
          return {0.0, 0.0};
        }
      },
      p);
}

// 6-point Lagrange interpolation of a uniform-grid function; zero outside.
double interp6(const Grid1D& grid, const Eigen::VectorXd& f, double z) {
  const double dz = grid.spacing();
  const double s = (z - grid.z_min) / dz;
  if (s < 0.0 || s > grid.n_points - 1) return 0.0;
  int i0 = static_cast<int>(std::floor(s)) - 2;
  i0 = std::clamp(i0, 0, grid.n_points - 6);
  double result = 0.0;
  for (int j = 0; j < 6; ++j) {
    double lj = 1.0;
    for (int m = 0; m < 6; ++m) {
      if (m == j) continue;
      lj *= (s - (i0 + m)) / static_cast<double>(j - m);
    }
    result += lj * f[i0 + j];
  }
  return result;
}

}  // namespace

TransverseKernel::TransverseKernel(const InteractionPotential& pot_osc,
                                   double a_rho_osc, QuadratureOptions opts)
    : pot_(&pot_osc), a_rho_(a_rho_osc), scale_(opts.scale) {
  require_positive(a_rho_osc, "a_rho");
  if (std::holds_alternative<ContactInteraction>(pot_osc))
    throw domain_error("potential",
                       "contact kernel is analytic, not quadrature-based");
  const PotentialScales s = scales_of(pot_osc);
  inner_scale_ = s.inner;
  range_ = std::min(outer_range(pot_osc), 1e6);
}

double TransverseKernel::operator()(double u) const {
  const double au = std::abs(u);
  if (au >= range_) return 0.0;
  const double r_cut = std::sqrt(64.0 * a_rho_ * a_rho_ + u * u);
  const double inv2a2 = 1.0 / (2.0 * a_rho_ * a_rho_);
  auto f = [&](double r) {
    return r * std::exp(-(r * r - u * u) * inv2a2) * evaluate(*pot_, r);
  };
  // Panels: resolve the potential core near r = |u|, then its tail, then the
  // Gaussian window.
  const double b1 = std::min(au + 12.0 * inner_scale_, r_cut);
  const double b2 = std::min(std::max(range_ * 0.25, b1), r_cut);
  double acc = simpson(f, au, b1, 192 * scale_);
  acc += simpson(f, b1, b2, 384 * scale_);
  acc += simpson(f, b2, r_cut, 384 * scale_);
  return acc / (a_rho_ * a_rho_);
}

double interaction_element(const Grid1D& grid, const Eigen::VectorXd& f1,
                           const Eigen::VectorXd& f2, const Eigen::VectorXd& f3,
                           const Eigen::VectorXd& f4,
                           const InteractionPotential& pot_osc,
                           double a_rho_osc, QuadratureOptions opts) {
  grid.validate();
  const int n = grid.n_points;
  if (f1.size() != n || f2.size() != n || f3.size() != n || f4.size() != n)
    throw domain_error("modes", "must live on the supplied grid");
  const double dz = grid.spacing();

  if (const auto* c = std::get_if<ContactInteraction>(&pot_osc)) {
    // Delta-potential reduction: g/(2 pi a_rho^2) Int f1 f3 f2 f4 dz.
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += f1[i] * f3[i] * f2[i] * f4[i];
    return c->g() / (2.0 * M_PI * a_rho_osc * a_rho_osc) * acc * dz;
  }

  const TransverseKernel W(pot_osc, a_rho_osc, opts);
  const Eigen::VectorXd F = f1.cwiseProduct(f3);
  const Eigen::VectorXd G = f2.cwiseProduct(f4);

  // u-mesh: symmetric layered panels resolving the kernel core.
  const double span = grid.z_max - grid.z_min;
  const double u_max = std::min(W.range(), span);
  const double s_in = std::max(W.inner_scale(), 1e-12);
  std::vector<double> edges = {0.0};
  const double e1 = std::min(12.0 * s_in, u_max);
  if (e1 > 0.0 && e1 < u_max) edges.push_back(e1);
  const double e2 = std::min(std::max(0.2 * u_max, 4.0 * e1), u_max);
  if (e2 > edges.back() && e2 < u_max) edges.push_back(e2);
  edges.push_back(u_max);

  const int counts_base[3] = {256, 384, 384};
  // C(u) = sum_i dz F(z_i) G(z_i - u), interpolating G between grid points.
  auto C_of = [&](double u) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      if (F[i] == 0.0) continue;
      acc += F[i] * interp6(grid, G, grid.point(i) - u);
    }
    return acc * dz;
  };
  auto integrand = [&](double u) { return W(u) * (C_of(u) + C_of(-u)); };

  double total = 0.0;
  for (size_t p = 0; p + 1 < edges.size(); ++p) {
    const int cnt = counts_base[std::min<size_t>(p, 2)] * opts.scale;
    total += simpson(integrand, edges[p], edges[p + 1], cnt);
  }
  return total;
}

InteractionPotential to_oscillator_units(const InteractionPotential& pot_si,
                                         const UnitSystem& units) {
  const double az = units.a_z();
  return std::visit(
      [&](const auto& pot) -> InteractionPotential {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, JostKohnNegative>) {
          return JostKohnNegative(pot.a_s / az, pot.r0 / az, 2.0);
        } else if constexpr (std::is_same_v<T, JostKohnPositive>) {
          return JostKohnPositive::from_lambda(pot.a_s / az, pot.r0 / az,
                                               pot.Lambda, 2.0);
        } else {
          ContactInteraction c;
          c.a_s = pot.a_s / az;
          c.hbar2_over_mu = 2.0;
          return c;
        }
      },
      pot_si);
}

HubbardResult hubbard_parameters(const SingleParticleSolution& sol,
                                 const InteractionPotential& pot_si,
                                 const TrapConfig& trap,
                                 QuadratureOptions opts) {
  const TrapDerived d = derive_trap(trap);
  const UnitSystem units(trap.mass, d.omega_z);
  const InteractionPotential pot = to_oscillator_units(pot_si, units);
  const double a_rho = d.a_rho / d.a_z;

  const Grid1D& g = sol.grid;
  const auto& l = sol.psi_l;
  const auto& r = sol.psi_r;

  HubbardResult res;
  res.U_ll = interaction_element(g, l, l, l, l, pot, a_rho, opts);
  res.U_rr = interaction_element(g, r, r, r, r, pot, a_rho, opts);
  res.params.U = res.U_ll;
  res.params.U_i = interaction_element(g, l, r, l, r, pot, a_rho, opts);
  res.params.I = interaction_element(g, l, l, l, r, pot, a_rho, opts);
  res.params.K = interaction_element(g, l, r, r, l, pot, a_rho, opts);
  res.params.J = sol.J;

  std::ostringstream os;
  os << "eta/a_z=" << trap.eta / d.a_z << " zeta=" << d.zeta
     << " n_points=" << g.n_points << " quad_scale=" << opts.scale;
  res.params.provenance = os.str();
  return res;
}

double contact_onsite_U(const SingleParticleSolution& sol, double a_s_si,
                        const TrapConfig& trap) {
  const TrapDerived d = derive_trap(trap);
  const double a_s = a_s_si / d.a_z;
  const double a_rho = d.a_rho / d.a_z;
  const double dz = sol.grid.spacing();
  double quartic = 0.0;
  for (int i = 0; i < sol.grid.n_points; ++i)
    quartic += std::pow(sol.psi_l[i], 4);
  quartic *= dz;
  const double g = 4.0 * M_PI * a_s;  // 4 pi hbar^2 a_s / m, oscillator units
  return g / (2.0 * M_PI * a_rho * a_rho) * quartic;
}

}  // namespace dwh
