#include "dwh/pairsolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dwh {

namespace {

// Dimensionless problem on a logarithmic grid x = ln(r/b), b = relative
// oscillator length. With u = e^{x/2} v the radial equation
//   u'' = (r^2 + 2 V - 2 E) u
// becomes v'' = W(x) v, W = 1/4 + e^{2x} (e^{2x} + 2 V(e^x) - 2 E).
struct LogGrid {
  double x0 = 0.0, h = 0.0;
  int n = 0;
  double x(int i) const { return x0 + i * h; }
  double r(int i) const { return std::exp(x(i)); }
};

struct ScaledPotential {
  // V in units hbar*omega as a function of r in units b.
  const InteractionPotential* pot;
  double b_si;
  double hbar_omega;
  bool contact;
  double a_s;  // in b units (contact only)

  double operator()(double r_b) const {
    if (contact) return 0.0;
    return evaluate(*pot, r_b * b_si) / hbar_omega;
  }
};

struct ShotResult {
  int nodes = 0;
  double tail = 0.0;  // v at the last grid point (sign carries the count)
  std::vector<double> v;
};

ShotResult shoot(const LogGrid& g, const ScaledPotential& V, double E,
                 bool keep) {
  ShotResult res;
  const double h2 = g.h * g.h;
  auto W = [&](int i) {
    const double r = g.r(i);
    const double r2 = r * r;
    return 0.25 + r2 * (r2 + 2.0 * V(r) - 2.0 * E);
  };
  double v_prev, v_curr;
  if (V.contact && V.a_s != 0.0) {
    // Bethe-Peierls start: u = 1 - r/a - E r^2 + ...
    auto u_series = [&](double r) { return 1.0 - r / V.a_s - E * r * r; };
    v_prev = u_series(g.r(0)) * std::exp(-0.5 * g.x(0));
    v_curr = u_series(g.r(1)) * std::exp(-0.5 * g.x(1));
  } else {
    // Regular start u ~ r (finite-range or free).
    auto u_series = [&](double r) {
      const double c = (2.0 * V(r) - 2.0 * E) / 6.0;
      return r * (1.0 + c * r * r);
    };
    v_prev = u_series(g.r(0)) * std::exp(-0.5 * g.x(0));
    v_curr = u_series(g.r(1)) * std::exp(-0.5 * g.x(1));
  }
  if (keep) {
    res.v.resize(g.n);
    res.v[0] = v_prev;
    res.v[1] = v_curr;
  }
  double w_prev = (1.0 - h2 / 12.0 * W(0)) * v_prev;
  double w_curr = (1.0 - h2 / 12.0 * W(1)) * v_curr;
  double scale_accum = 0.0;
  for (int i = 1; i < g.n - 1; ++i) {
    const double w_next = 2.0 * w_curr - w_prev + h2 * W(i) * v_curr;
    double v_next = w_next / (1.0 - h2 / 12.0 * W(i + 1));
    if (std::signbit(v_next) != std::signbit(v_curr) && v_next != 0.0 &&
        v_curr != 0.0)
      ++res.nodes;
    w_prev = w_curr;
    w_curr = w_next;
    v_prev = v_curr;
    v_curr = v_next;
    const double m = std::abs(v_curr);
    if (m > 1e250) {
      // keep==true solves are converged eigenstates and never overflow
      v_curr /= m;
      v_prev /= m;
      w_curr /= m;
      w_prev /= m;
      scale_accum += std::log(m);
    }
    if (keep) res.v[i + 1] = v_curr;
  }
  res.tail = v_curr;
  (void)scale_accum;
  return res;
}

}  // namespace

void RelativeMotionProblem::validate() const {
  require_positive(omega, "omega");
  require_positive(reduced_mass, "reduced_mass");
  if (r_max_factor < 10.0)
    throw domain_error("r_max_factor", "must be >= 10 oscillator lengths");
}

PairSolution solve_relative_ground(const RelativeMotionProblem& problem) {
  problem.validate();
  const double b = std::sqrt(constants::hbar / (problem.reduced_mass * problem.omega));
  const double hbar_omega = constants::hbar * problem.omega;

  ScaledPotential V{};
  V.pot = &problem.potential;
  V.b_si = b;
  V.hbar_omega = hbar_omega;
  V.contact = std::holds_alternative<ContactInteraction>(problem.potential);
  double r0_b = 0.0;
  if (V.contact) {
    V.a_s = std::get<ContactInteraction>(problem.potential).a_s / b;
  } else {
    r0_b = std::visit(
        [&](const auto& p) -> double {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, ContactInteraction>)
            return 0.0;
          else
            return p.r0 / b;
        },
        problem.potential);
  }

  LogGrid g;
  const double r_min = V.contact ? 1e-6 : std::min(r0_b / 50.0, 1e-6);
  g.x0 = std::log(r_min);
  const double x_max = std::log(problem.r_max_factor);
  g.h = 5e-4;
  g.n = static_cast<int>((x_max - g.x0) / g.h) + 2;
  if (!V.contact && r0_b > 0.0) {
    // >= 20 grid points inside r0 is automatic on the log grid; check anyway.
    const int inside = static_cast<int>(std::log(r0_b / r_min) / g.h);
    if (inside < 20)
      throw domain_error("grid", "log grid does not resolve r0");
  }

  // Deep-state floor in hbar*omega.
  double floor_E = -std::numeric_limits<double>::infinity();
  if (!V.contact && r0_b > 0.0)
    floor_E = -problem.deep_threshold / (r0_b * r0_b);
  const double E_lo_default = V.contact ? 0.5 + 1e-9 : std::max(floor_E, -1e8);

  // Sturm count: nodes(E) = number of eigenvalues below E.
  const int target = shoot(g, V, E_lo_default, false).nodes;
  double lo = E_lo_default, hi = 1.5 + 0.25;
  if (shoot(g, V, hi, false).nodes <= target) {
    std::ostringstream os;
    os << "no trap-dressed state in bracket [" << lo << ", " << hi
       << "] hbar*omega (node counts " << target << ")";
    throw numeric_error(os.str());
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (shoot(g, V, mid, false).nodes > target)
      hi = mid;
    else
      lo = mid;
  }
  const double E = 0.5 * (lo + hi);
  ShotResult sol = shoot(g, V, E, true);

  PairSolution out;
  out.E_rel = E;
  out.nodes = sol.nodes;
  out.r.resize(g.n);
  out.u.resize(g.n);
  double norm2 = 0.0;
  for (int i = 0; i < g.n; ++i) {
    out.r[i] = g.r(i);
    out.u[i] = sol.v[i] * std::exp(0.5 * g.x(i));
    // Int u^2 dr = Int v^2 e^{2x} dx
    const double w = (i == 0 || i == g.n - 1) ? 0.5 : 1.0;
    norm2 += w * sol.v[i] * sol.v[i] * std::exp(2.0 * g.x(i)) * g.h;
  }
  const double norm = std::sqrt(norm2);
  for (auto& ui : out.u) ui /= norm;
  for (auto& vi : sol.v) vi /= norm;

  // Independent 5-point residual of v'' = W v (grid-norm RMS).
  double rss = 0.0, ref = 0.0;
  int cnt = 0;
  auto Wx = [&](int i) {
    const double r = g.r(i);
    const double r2 = r * r;
    return 0.25 + r2 * (r2 + 2.0 * V(r) - 2.0 * E);
  };
  for (int i = 2; i + 2 < g.n; i += 7) {
    const double d2 = (-sol.v[i - 2] + 16.0 * sol.v[i - 1] - 30.0 * sol.v[i] +
                       16.0 * sol.v[i + 1] - sol.v[i + 2]) /
                      (12.0 * g.h * g.h);
    const double res = d2 - Wx(i) * sol.v[i];
    // Residual of the Schrodinger form (energy units): res / (2 e^{2x}) * ...
    const double scale = 2.0 * std::exp(2.0 * g.x(i));
    rss += (res / scale) * (res / scale);
    ref += sol.v[i] * sol.v[i];
    ++cnt;
  }
  out.residual = std::sqrt(rss / std::max(ref, 1e-300));
  if (out.residual > 1e-8)
    throw numeric_error("pair solution residual above 1e-8");
  return out;
}

PairU onsite_U_from_pair(const PairSolution& solution,
                         const RelativeMotionProblem& problem) {
  PairU u;
  u.energy_shift = solution.E_rel - 1.5;
  if (std::holds_alternative<ContactInteraction>(problem.potential)) {
    u.matrix_element = std::numeric_limits<double>::quiet_NaN();
    return u;
  }
  const double b =
      std::sqrt(constants::hbar / (problem.reduced_mass * problem.omega));
  const double hbar_omega = constants::hbar * problem.omega;
  double acc = 0.0;
  for (size_t i = 1; i < solution.r.size(); ++i) {
    const double dr = solution.r[i] - solution.r[i - 1];
    const double vi = evaluate(problem.potential, solution.r[i] * b) / hbar_omega;
    const double vim = evaluate(problem.potential, solution.r[i - 1] * b) / hbar_omega;
    acc += 0.5 * (solution.u[i] * solution.u[i] * vi +
                  solution.u[i - 1] * solution.u[i - 1] * vim) *
           dr;
  }
  u.matrix_element = acc;
  return u;
}

}  // namespace dwh
