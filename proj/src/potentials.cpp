#include "dwh/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dwh {

namespace {

double alpha_of(double a_s, double r0) {
  return std::sqrt(1.0 - 2.0 * r0 / a_s);
}

}  // namespace

double lambda_from_kappa(double kappa, double a_s, double r0) {
  require_positive(r0, "r0");
  if (!(kappa > 0.0)) throw domain_error("kappa", "must be positive");
  if (!(a_s > 2.0 * r0)) throw domain_error("a_s", "requires a_s > 2 r0");
  const double alpha = alpha_of(a_s, r0);
  const double q = kappa * r0 / (1.0 + alpha);
  const double Lambda = (q - 1.0) / (q + 1.0);
  if (!(Lambda > -1.0 && Lambda < 1.0))
    throw domain_error("kappa", "maps outside Lambda in (-1, 1)");
  return Lambda;
}

JostKohnPositive JostKohnPositive::from_lambda(double a_s, double r0,
                                               double Lambda,
                                               double hbar2_over_mu) {
  require_positive(r0, "r0");
  require_positive(hbar2_over_mu, "hbar2_over_mu");
  if (!(a_s > 2.0 * r0))
    throw domain_error("a_s", "requires a_s > 2 r0 (alpha real)");
  if (!(Lambda > -1.0 && Lambda < 1.0))
    throw domain_error("Lambda", "must lie in (-1, 1)");
  JostKohnPositive p;
  p.a_s = a_s;
  p.r0 = r0;
  p.Lambda = Lambda;
  p.hbar2_over_mu = hbar2_over_mu;
  p.alpha = alpha_of(a_s, r0);
  p.beta = 1.0 + p.alpha;
  p.kappa = (1.0 + p.alpha) * (1.0 + Lambda) / (r0 * (1.0 - Lambda));
  p.v_amp = 4.0 * hbar2_over_mu * p.alpha / (r0 * r0);
  return p;
}

JostKohnPositive JostKohnPositive::from_kappa(double a_s, double r0,
                                              double kappa,
                                              double hbar2_over_mu) {
  return from_lambda(a_s, r0, lambda_from_kappa(kappa, a_s, r0),
                     hbar2_over_mu);
}

JostKohnNegative::JostKohnNegative(double a_s_, double r0_,
                                   double hbar2_over_mu_) {
  require_positive(r0_, "r0");
  require_positive(hbar2_over_mu_, "hbar2_over_mu");
  if (!(a_s_ < 0.0)) throw domain_error("a_s", "must be negative");
  a_s = a_s_;
  r0 = r0_;
  hbar2_over_mu = hbar2_over_mu_;
  alpha = alpha_of(a_s, r0);
  beta = 1.0 + alpha;
}

double evaluate(const JostKohnNegative& p, double r) {
  if (r < 0.0) throw domain_error("r", "separation must be non-negative");
  const double x = r / p.r0;
  if (2.0 * p.beta * x > 700.0) return 0.0;  // below 1e-300 of the depth
  const double e = std::exp(-2.0 * p.beta * x);
  const double amp = 4.0 * p.hbar2_over_mu / (p.r0 * p.r0);
  const double d = p.alpha + e;
  return -amp * p.alpha * p.beta * p.beta * e / (d * d);
}

double evaluate(const JostKohnPositive& p, double r) {
  if (r < 0.0) throw domain_error("r", "separation must be non-negative");
  const double x = r / p.r0;
  const double al = p.alpha, L = p.Lambda, be = p.beta;
  // Leading envelope e^{-2(1-alpha)x}; everything else is bounded.
  const double lead = 2.0 * (1.0 - al) * x;
  if (lead > 700.0) return 0.0;
  const double e2bx = std::exp(-2.0 * be * x);
  const double e2ax = std::exp(-2.0 * al * x);
  const double e2x = std::exp(-2.0 * x);
  const double e4x = std::exp(-4.0 * x);
  const double elead = std::exp(-lead);

  const double t1 = (1.0 + al * L) * (al + L) * (1.0 - al) * (1.0 - L * L * e2bx);
  const double t2 = (1.0 + L * al) * (1.0 + L * al) * e2ax -
                    (al + L) * (al + L) * e2x;
  const double num = t1 * t1 - L * L * be * be * t2 * t2;
  const double den =
      (1.0 + al * L) * (1.0 + al * L) * (al + L * L * e2bx) -
      (al + L) * (al + L) * (elead + al * L * L * e4x);
  return p.v_amp * elead * num / (den * den);
}

double evaluate(const InteractionPotential& p, double r) {
  return std::visit(
      [r](const auto& pot) -> double {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, ContactInteraction>) {
          throw domain_error("potential",
                             "contact interaction has no pointwise value");
        } else {
          return evaluate(pot, r);
        }
      },
      p);
}

double outer_range(const InteractionPotential& p) {
  return std::visit(
      [](const auto& pot) -> double {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, JostKohnNegative>) {
          return pot.r0 * (350.0 / pot.beta + 1.0);
        } else if constexpr (std::is_same_v<T, JostKohnPositive>) {
          const double rate = 2.0 * (1.0 - pot.alpha);  // per x
          return pot.r0 * (700.0 / std::max(rate, 1e-6));
        } else {
          return 0.0;
        }
      },
      p);
}

namespace {

struct RadialProblem {
  // u'' = (2 V(r)/(hbar^2/mu) - k^2) u in the chosen length unit
  const InteractionPotential* pot;
  double hbar2_over_mu;
  double q(double r, double k) const {
    return 2.0 * evaluate(*pot, r) / hbar2_over_mu - k * k;
  }
};

// Outward Numerov for u'' = Q(r) u with u ~ r near the origin; returns the
// phase shift from two-point matching against sin(kr + delta).
double numerov_phase(const RadialProblem& prob, double k, double r_match,
                     double h) {
  const int n = static_cast<int>(r_match / h) + 2;
  if (n < 100) throw numeric_error("scattering grid too short");
  const double h2 = h * h;
  auto Q = [&](int i) { return prob.q((i + 1) * h, k); };
  double u_prev = h, u_curr = 2.0 * h;
  double w_prev = (1.0 - h2 / 12.0 * Q(0)) * u_prev;
  double w_curr = (1.0 - h2 / 12.0 * Q(1)) * u_curr;
  double u1 = 0.0, r1 = 0.0;
  const int i1 = static_cast<int>(0.8 * n);
  for (int i = 1; i < n - 1; ++i) {
    const double w_next = 2.0 * w_curr - w_prev + h2 * Q(i) * u_curr;
    const double u_next = w_next / (1.0 - h2 / 12.0 * Q(i + 1));
    w_prev = w_curr;
    w_curr = w_next;
    u_prev = u_curr;
    u_curr = u_next;
    if (!std::isfinite(u_curr)) {
      std::ostringstream os;
      os << "phase-shift integration diverged at r = " << (i + 2) * h
         << " with step " << h;
      throw numeric_error(os.str());
    }
    // Rescale to avoid overflow for strongly repulsive cores.
    const double m = std::abs(u_curr);
    if (m > 1e200) {
      u_curr /= m;
      u_prev /= m;
      w_curr /= m;
      w_prev /= m;
      if (i >= i1) u1 /= m;
    }
    if (i + 1 == i1) {
      u1 = u_curr;
      r1 = (i + 2) * h;
    }
  }
  const double u2 = u_curr, r2 = (n - 1 + 1) * h;
  const double num = u2 * std::sin(k * r1) - u1 * std::sin(k * r2);
  const double den = u1 * std::cos(k * r2) - u2 * std::cos(k * r1);
  return std::atan2(num, den);
}

struct Scales {
  double r0;
  double a_s;
  double h2mu;
};

Scales scales_of(const InteractionPotential& p) {
  return std::visit(
      [](const auto& pot) -> Scales {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, ContactInteraction>) {
          return {0.0, pot.a_s, pot.hbar2_over_mu};
        } else {
          return {pot.r0, pot.a_s, pot.hbar2_over_mu};
        }
      },
      p);
}

}  // namespace

std::vector<double> default_k_grid(const InteractionPotential& p, int n) {
  const Scales s = scales_of(p);
  const double scale = std::max({s.r0, std::abs(s.a_s), 1e-30});
  std::vector<double> ks(n);
  for (int i = 0; i < n; ++i)
    ks[i] = (0.004 + 0.036 * i / (n - 1.0)) / scale;
  return ks;
}

ScatteringFit verify_scattering(const InteractionPotential& p,
                                const std::vector<double>& k_grid) {
  if (k_grid.size() < 3)
    throw domain_error("k_grid", "need at least 3 momenta for the fit");
  const Scales sc = scales_of(p);

  ScatteringFit fit;
  fit.k = k_grid;

  if (std::holds_alternative<ContactInteraction>(p)) {
    // Bethe-Peierls phase: k cot(delta) = -1/a_s exactly.
    const double a = sc.a_s;
    for (double k : k_grid) {
      const double d = (a == 0.0) ? 0.0 : std::atan(-k * a);
      fit.delta.push_back(d);
      fit.kcotdelta.push_back(a == 0.0 ? 1e300 : -1.0 / a);
    }
    fit.a_s_fit = a;
    fit.r0_fit = 0.0;
    return fit;
  }

  RadialProblem prob{&p, sc.h2mu};
  const double r_match =
      std::max(25.0 * std::max(sc.r0, std::abs(sc.a_s)), outer_range(p) * 1.2);
  for (double k : k_grid) {
    if (k * sc.r0 >= 0.1)
      throw domain_error("k_grid", "outside the low-energy window k*r0 < 0.1");
    // Resolve both the potential core and the asymptotic wavelength.
    const double h = std::min({sc.r0 / 400.0, 0.02 / k, r_match / 5e4});
    fit.delta.push_back(numerov_phase(prob, k, r_match, h));
  }
  // Weighted quadratic fit in k^2: y = c0 + (r/2) x + c2 x^2, x = k^2.
  const int m = static_cast<int>(k_grid.size());
  double S[3][3] = {{0}}, b[3] = {0};
  for (int i = 0; i < m; ++i) {
    const double x = k_grid[i] * k_grid[i];
    const double y = k_grid[i] / std::tan(fit.delta[i]);
    fit.kcotdelta.push_back(y);
    const double w = 1.0 / x;
    const double col[3] = {1.0, 0.5 * x, x * x};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) S[r][c] += w * col[r] * col[c];
      b[r] += w * col[r] * y;
    }
  }
  // Solve the 3x3 normal equations by Gaussian elimination.
  double A[3][4];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) A[r][c] = S[r][c];
    A[r][3] = b[r];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[piv], A[col]);
    if (A[col][col] == 0.0) throw numeric_error("singular effective-range fit");
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = A[r][col] / A[col][col];
      for (int c = col; c < 4; ++c) A[r][c] -= f * A[col][c];
    }
  }
  const double c0 = A[0][3] / A[0][0];
  const double c1 = A[1][3] / A[1][1];
  fit.a_s_fit = (c0 == 0.0) ? 1e300 : -1.0 / c0;
  fit.r0_fit = c1;
  return fit;
}

}  // namespace dwh
