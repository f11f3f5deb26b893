// Independent numerical oracles used only by the test suites. These must not
// share code paths with the library implementations they check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace oracle {

// Second-order finite-difference eigensolve of
//   [-1/2 d^2/dz^2 + V(z)] psi = E psi  on [-L, L].
inline Eigen::VectorXd fd_levels(double L, int n,
                                 const std::function<double(double)>& V,
                                 int k) {
  const double h = 2.0 * L / (n - 1);
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    H(i, i) = 1.0 / (h * h) + V(-L + i * h);
    if (i + 1 < n) {
      H(i, i + 1) = -0.5 / (h * h);
      H(i + 1, i) = -0.5 / (h * h);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  return es.eigenvalues().head(k);
}

// Classic RK4 for i dpsi/dt = H psi with fixed step.
inline Eigen::VectorXcd rk4_evolve(const Eigen::MatrixXd& H,
                                   Eigen::VectorXcd psi, double t_final,
                                   double dt) {
  const std::complex<double> mi(0.0, -1.0);
  auto rhs = [&](const Eigen::VectorXcd& y) { return mi * (H * y); };
  double t = 0.0;
  while (t < t_final - 1e-15) {
    const double step = std::min(dt, t_final - t);
    const Eigen::VectorXcd k1 = rhs(psi);
    const Eigen::VectorXcd k2 = rhs(psi + 0.5 * step * k1);
    const Eigen::VectorXcd k3 = rhs(psi + 0.5 * step * k2);
    const Eigen::VectorXcd k4 = rhs(psi + step * k3);
    psi += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    t += step;
  }
  return psi;
}

// Busch relation for two contact-interacting atoms in an isotropic trap:
//   sqrt(2) Gamma(3/4 - E/2) / Gamma(1/4 - E/2) = a_ho / a_s,
// E in hbar*omega, a_ho the single-atom oscillator length. Ground branch
// for a_s < 0 lies in (1/2, 3/2).
inline double busch_ground_energy(double a_s_over_aho) {
  const double target = 1.0 / a_s_over_aho;
  auto f = [&](double E) {
    return std::sqrt(2.0) * std::tgamma(0.75 - 0.5 * E) /
               std::tgamma(0.25 - 0.5 * E) -
           target;
  };
  double lo = 0.5 + 1e-9, hi = 1.5 - 1e-9;
  double flo = f(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Iterative radix-2 FFT (input zero-padded to a power of two by the caller).
inline void fft(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (size_t j = 0; j < len / 2; ++j) {
        const auto u = a[i + j];
        const auto v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

struct SpectrumPeaks {
  std::vector<double> freq;   // bin centers (cycles per unit time)
  std::vector<double> power;
  double bin_width = 0.0;
};

// Hann-windowed power spectrum of a real series sampled at uniform dt,
// mean removed (AC part only).
inline SpectrumPeaks windowed_power_spectrum(const std::vector<double>& series,
                                             double dt) {
  const size_t n = series.size();
  size_t m = 1;
  while (m < n) m <<= 1;
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  std::vector<std::complex<double>> buf(m, 0.0);
  for (size_t i = 0; i < n; ++i) {
    const double w =
        0.5 * (1.0 - std::cos(2.0 * M_PI * i / (n - 1.0)));
    buf[i] = (series[i] - mean) * w;
  }
  fft(buf);
  SpectrumPeaks out;
  out.bin_width = 1.0 / (static_cast<double>(m) * dt);
  out.freq.resize(m / 2);
  out.power.resize(m / 2);
  for (size_t i = 0; i < m / 2; ++i) {
    out.freq[i] = static_cast<double>(i) * out.bin_width;
    out.power[i] = std::norm(buf[i]);
  }
  return out;
}

}  // namespace oracle
