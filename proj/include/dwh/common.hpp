#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwh {

inline constexpr const char* kVersion = "dwhubbard 0.1.0";

// Physical constants (SI).
namespace constants {
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double mass_li6 = 6.0151228874 * atomic_mass_unit;  // kg
inline constexpr double mass_cr52 = 51.9405062 * atomic_mass_unit;   // kg
inline constexpr double bohr_radius = 5.29177210903e-11;             // m
}  // namespace constants

// Shared numeric tolerances used across modules and tests.
namespace tol {
inline constexpr double unit_roundtrip = 1e-14;
inline constexpr double calibration = 1e-12;
inline constexpr double orthonormality = 1e-10;
inline constexpr double parity = 1e-8;
inline constexpr double eigen_residual = 1e-12;
inline constexpr double norm_conservation = 1e-12;
}  // namespace tol

// Invalid physical input (non-positive mass, out-of-range shape parameter, ...).
// `field` names the offending quantity.
class domain_error : public std::runtime_error {
 public:
  domain_error(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Numerical failure (non-convergent solver, unresolved bracket, ...).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require_positive(double value, const char* field) {
  if (!(value > 0.0)) throw domain_error(field, "must be strictly positive");
}

inline void require_finite(double value, const char* field) {
  if (!std::isfinite(value)) throw domain_error(field, "must be finite");
}

using Warnings = std::vector<std::string>;

}  // namespace dwh
