#include "dwh/hubbard.hpp"

#include <cmath>

namespace dwh {

DerivedCouplings DerivedCouplings::from(const HubbardParameters& p) {
  DerivedCouplings d;
  d.J_minus = p.J - p.I;
  d.U_bar = p.U + p.U_i + 2.0 * p.K;
  d.U_plus = p.U + p.U_i;
  d.U_minus = p.U - p.U_i;
  d.Omega = std::hypot(d.U_minus, 4.0 * d.J_minus);
  d.W = p.U - p.K;
  return d;
}

Eigen::Matrix4d h_two_fermion(const HubbardParameters& p) {
  const double Jm = p.J - p.I;
  Eigen::Matrix4d h;
  // Basis [|ud,0>, |u,d>, |d,u>, |0,ud>]; doubly occupied states carry U,
  // singly occupied U_i, tunneling -J_minus, exchange/pair hopping K.
  h << p.U, -Jm, -Jm, p.K,
      -Jm, p.U_i, p.K, -Jm,
      -Jm, p.K, p.U_i, -Jm,
      p.K, -Jm, -Jm, p.U;
  return h;
}

Eigen::Matrix3d h_two_boson(const HubbardParameters& p) {
  const double Jm = p.J - p.I;
  const double s2 = std::sqrt(2.0);
  Eigen::Matrix3d h;
  h << p.U, -s2 * Jm, p.K,
      -s2 * Jm, p.U_i + p.K, -s2 * Jm,
      p.K, -s2 * Jm, p.U;
  return h;
}

Eigen::Matrix4d h_three_boson(const HubbardParameters& p) {
  const double t = p.J - 2.0 * p.I;
  const double s3 = std::sqrt(3.0);
  const double diag_mid = p.U + 2.0 * p.U_i + 2.0 * p.K;
  Eigen::Matrix4d h;
  h << 3.0 * p.U, -s3 * t, s3 * p.K, 0.0,
      -s3 * t, diag_mid, -2.0 * t, s3 * p.K,
      s3 * p.K, -2.0 * t, diag_mid, -s3 * t,
      0.0, s3 * p.K, -s3 * t, 3.0 * p.U;
  return h;
}

Eigen::Matrix2d h_three_fermion(const HubbardParameters& p) {
  Eigen::Matrix2d h;
  h << p.U + p.U_i, -p.J + 2.0 * p.I,
      -p.J + 2.0 * p.I, p.U + p.U_i;
  return h;
}

Eigen::Vector4d bell_plus() {
  return Eigen::Vector4d(1, 0, 0, 1) / std::sqrt(2.0);
}
Eigen::Vector4d bell_minus() {
  return Eigen::Vector4d(1, 0, 0, -1) / std::sqrt(2.0);
}
Eigen::Vector4d bell_zero() {
  return Eigen::Vector4d(0, 1, -1, 0) / std::sqrt(2.0);
}
Eigen::Vector4d bell_one() {
  return Eigen::Vector4d(0, 1, 1, 0) / std::sqrt(2.0);
}

namespace {

void fix_sign(Eigen::Vector4d& v) {
  int imax = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  if (v[imax] < 0) v = -v;
}

}  // namespace

SpectrumResult analytic_spectrum(const HubbardParameters& p) {
  const DerivedCouplings d = DerivedCouplings::from(p);
  SpectrumResult r;
  r.E_a = 0.5 * (d.U_bar - d.Omega);
  r.E_c = 0.5 * (d.U_bar + d.Omega);
  r.E_b = p.U - p.K;
  r.E_d = p.U_i - p.K;
  r.b = bell_minus();
  r.d = bell_zero();

  const double Jm = d.J_minus;
  if (Jm == 0.0) {
    r.degenerate_J_minus = true;
    // |+> and |1> are already eigenvectors; assign by energy.
    const double e_plus = p.U + p.K;    // <+|H|+>
    const double e_one = p.U_i + p.K;   // <1|H|1>
    if (e_plus <= e_one) {
      r.a = bell_plus();
      r.c = bell_one();
    } else {
      r.a = bell_one();
      r.c = bell_plus();
    }
    fix_sign(r.a);
    fix_sign(r.c);
    return r;
  }

  const double xa = d.U_minus + d.Omega;
  const double na = 4.0 * Jm / std::hypot(4.0 * Jm, xa);
  r.a = na * (bell_plus() + (xa / (4.0 * Jm)) * bell_one());
  const double xc = d.U_minus - d.Omega;
  const double nc = 4.0 * Jm / std::hypot(4.0 * Jm, xc);
  r.c = nc * (bell_plus() + (xc / (4.0 * Jm)) * bell_one());
  fix_sign(r.a);
  fix_sign(r.c);
  return r;
}

}  // namespace dwh
