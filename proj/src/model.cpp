#include "gravcat/model.hpp"

#include <cmath>
#include <cstdio>

namespace gravcat {

namespace {

void require_temperature(const ModelParams& p) {
  if (!(p.temperature > 0.0) || !std::isfinite(p.temperature)) {
    throw ParameterError("temperature must be positive and finite, got " +
                         std::to_string(p.temperature));
  }
}

void require_thermal_range(double k_over_t, double gamma_over_t) {
  const double worst = std::max(k_over_t, std::abs(gamma_over_t));
  if (worst > kMaxThermalExponent) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "thermal exponent %.6g exceeds %.0f", worst, kMaxThermalExponent);
    throw OverflowError(buf);
  }
}

Vector<4> two_level(double c00, double c11) {
  const double n = std::hypot(c00, c11);
  return {c00 / n, 0.0, 0.0, c11 / n};
}

} // namespace

double ModelParams::coupling_norm() const { return std::hypot(gamma, omega); }

double gamma_from_masses(double G, double mass, double x, double x_prime) {
  if (!(G > 0.0) || !(mass > 0.0) || !(x > 0.0) || !(x_prime > 0.0)) {
    throw ParameterError("gamma_from_masses: G, mass and distances must be positive");
  }
  return 0.5 * G * mass * mass * (1.0 / x - 1.0 / x_prime);
}

Matrix4 hamiltonian(const ModelParams& p) {
  const Matrix2 id = pauli::identity();
  return 0.5 * p.omega * (kron(pauli::z(), id) + kron(id, pauli::z())) -
         p.gamma * kron(pauli::x(), pauli::x());
}

std::array<double, 4> energies(const ModelParams& p) {
  const double k = p.coupling_norm();
  return {-p.gamma, p.gamma, -k, k};
}

Spectrum spectrum(const ModelParams& p) {
  const double w = p.omega;
  const double g = p.gamma;
  if (w == 0.0 && g == 0.0) {
    throw ParameterError("spectrum: omega = gamma = 0 leaves psi2 and psi3 undefined");
  }
  const double k = p.coupling_norm();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double sign_g = g < 0.0 ? -1.0 : 1.0;

  // psi2 ~ (-(w - K), g) and psi3 ~ (-(w + K), g) on |00>,|11>. The factor that
  // vanishes as g -> 0 is divided out on the side where it cancels.
  const Vector<4> psi2 = w >= 0.0 ? two_level(sign_g * g, sign_g * (k + w)) : two_level(k - w, g);
  const Vector<4> psi3 = w >= 0.0 ? two_level(-(w + k), g) : two_level(-sign_g * g, sign_g * (k - w));

  Spectrum s;
  s.levels[0] = {-g, {0.0, inv_sqrt2, inv_sqrt2, 0.0}};
  s.levels[1] = {g, {0.0, -inv_sqrt2, inv_sqrt2, 0.0}};
  s.levels[2] = {-k, psi2};
  s.levels[3] = {k, psi3};
  return s;
}

double partition_function(const ModelParams& p) {
  require_temperature(p);
  const double a = p.coupling_norm() / p.temperature;
  const double b = p.gamma / p.temperature;
  require_thermal_range(a, b);
  return 2.0 * (std::cosh(a) + std::cosh(b));
}

DensityMatrix thermal_state(const ModelParams& p) {
  require_temperature(p);
  if (p.omega < 0.0) throw ParameterError("thermal_state: omega must be non-negative");
  const double k = p.coupling_norm();
  if (k == 0.0) return DensityMatrix::maximally_mixed();

  const double a = k / p.temperature;
  const double b = p.gamma / p.temperature;
  require_thermal_range(a, b);

  // Every hyperbolic function is scaled by e^{-K/T}; zhat = Z e^{-K/T}.
  const double e2 = std::exp(-2.0 * a);
  const double ep = std::exp(b - a);
  const double em = std::exp(-b - a);
  const double zhat = (1.0 + e2) + (ep + em);

  const double one_plus = 1.0 + p.omega / k;
  const double one_minus = p.gamma * p.gamma / (k * (k + p.omega)); // 1 - omega/K

  const double r11 = (one_minus + e2 * one_plus) / (2.0 * zhat);
  const double r44 = (one_plus + e2 * one_minus) / (2.0 * zhat);
  const double r14 = (p.gamma / k) * (1.0 - e2) / (2.0 * zhat);
  const double r22 = (ep + em) / (2.0 * zhat);
  const double r23 = (ep - em) / (2.0 * zhat);

  return DensityMatrix(Matrix4{r11, 0.0, 0.0, r14,  //
                               0.0, r22, r23, 0.0,  //
                               0.0, r23, r22, 0.0,  //
                               r14, 0.0, 0.0, r44});
}

} // namespace gravcat
