#include "gravcat/measures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "gravcat/channels.hpp"

namespace gravcat {

namespace {

constexpr double kRoundoffFloor = 1e-12;

// x log2 x with 0 log 0 = 0; tiny negative arguments are treated as zero.
double xlog2x(double x) {
  if (x <= 0.0) {
    if (x >= -kRoundoffFloor) return 0.0;
    char buf[96];
    std::snprintf(buf, sizeof buf, "entropy argument %.6g is negative", x);
    throw NumericError(buf);
  }
  return x * std::log2(x);
}

double nonnegative(double x, const char* what) {
  if (x < -kRoundoffFloor) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s is negative (%.6g)", what, x);
    throw NumericError(buf);
  }
  return std::max(x, 0.0);
}

} // namespace

XStateCoefficients bloch_x(const DensityMatrix& rho) {
  require_x_shaped(rho, "bloch_x");
  const auto& m = rho.matrix();
  const double r11 = m(0, 0).real();
  const double r22 = m(1, 1).real();
  const double r33 = m(2, 2).real();
  const double r44 = m(3, 3).real();
  const double re14 = m(0, 3).real();
  const double re23 = m(1, 2).real();
  return {
      .a3 = r11 + r22 - r33 - r44,
      .b3 = r11 - r22 + r33 - r44,
      .c11 = 2.0 * (re23 + re14),
      .c22 = 2.0 * (re23 - re14),
      .c33 = r11 - r22 - r33 + r44,
  };
}

double entanglement_witness(const DensityMatrix& state, const DensityMatrix& reference) {
  double overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) overlap += (reference(i, j) * state(j, i)).real();
  return overlap - 0.5;
}

double ew_closed_form(const ModelParams& p, double phase) {
  // Range checks (T > 0, exponents <= 700) are shared with the thermal state.
  partition_function(p);
  const double k = p.coupling_norm();
  if (k == 0.0) return 0.25 - 0.5; // H = 0: the state is I/4

  const double a = k / p.temperature;
  const double b = p.gamma / p.temperature;
  const double k2 = k * k;
  const double g2 = p.gamma * p.gamma;
  const double w2 = p.omega * p.omega;

  // Upsilon_i * e^{-2a}
  const double cosh2b = 0.5 * (std::exp(2.0 * b - 2.0 * a) + std::exp(-2.0 * b - 2.0 * a));
  const double coshb = 0.5 * (std::exp(b - a) + std::exp(-b - a));
  const double cosha = 0.5 * (1.0 + std::exp(-2.0 * a));
  const double sinha = 0.5 * (1.0 - std::exp(-2.0 * a));
  const double cosh2a = 0.5 * (1.0 + std::exp(-4.0 * a));

  const double u1 = (-g2 - 2.0 * w2) * std::exp(-2.0 * a) + k2 * cosh2b;
  const double u2 = k2 * coshb * cosha;
  const double u3 = w2 * cosh2a;
  const double u4 = g2 * std::cos(phase) * sinha * sinha;

  // e^{2(a+b)} / [(e^a + e^b)^2 (e^{a+b} + 1)^2] = e^{-2a} / [(1 + e^{b-a})^2 (1 + e^{-a-b})^2]
  const double d1 = 1.0 + std::exp(b - a);
  const double d2 = 1.0 + std::exp(-a - b);
  return (u1 - 4.0 * u2 + u3 + 2.0 * u4) / (k2 * d1 * d1 * d2 * d2);
}

double steering_value(const XStateCoefficients& x) {
  double pair_terms = 0.0;
  for (double c : {x.c11, x.c22}) pair_terms += xlog2x(1.0 - c) + xlog2x(1.0 + c);
  const double x1 = xlog2x(1.0 + x.a3) + xlog2x(1.0 - x.a3);
  const double x2 = xlog2x(1.0 + x.c33 + x.a3 + x.b3);
  const double x3 = xlog2x(1.0 - x.c33 - x.a3 + x.b3);
  const double x4 = xlog2x(1.0 + x.c33 - x.a3 - x.b3);
  const double x5 = xlog2x(1.0 - x.c33 + x.a3 - x.b3);
  return pair_terms - x1 + 0.5 * (x2 + x3 + x4 + x5);
}

double steerability(const DensityMatrix& rho) {
  const double value = steering_value(bloch_x(rho));
  return std::max(0.0, (value - 2.0) / (kMaxSteeringValue - 2.0));
}

double chsh_value(const DensityMatrix& rho) {
  const XStateCoefficients x = bloch_x(rho);
  const double m14 = std::abs(rho(0, 3));
  const double m23 = std::abs(rho(1, 2));
  const double b1 = std::hypot(m14, m23);
  const double b2 = std::sqrt(4.0 * (m14 + m23) * (m14 + m23) + x.c33 * x.c33);
  return 2.0 * std::max(2.0 * std::numbers::sqrt2 * b1, b2);
}

double bell_nonlocality(const DensityMatrix& rho) {
  const double b = chsh_value(rho);
  return std::max(0.0, (b - 2.0) / (2.0 * std::numbers::sqrt2 - 2.0));
}

double concurrence(const DensityMatrix& rho) {
  require_x_shaped(rho, "concurrence");
  const double r11 = nonnegative(rho(0, 0).real(), "rho_11");
  const double r22 = nonnegative(rho(1, 1).real(), "rho_22");
  const double r33 = nonnegative(rho(2, 2).real(), "rho_33");
  const double r44 = nonnegative(rho(3, 3).real(), "rho_44");
  const double inner = std::abs(rho(1, 2)) - std::sqrt(r11 * r44);
  const double outer = std::abs(rho(0, 3)) - std::sqrt(r22 * r33);
  return 2.0 * std::max({0.0, inner, outer});
}

double purity(const DensityMatrix& rho) {
  double s = 0.0;
  for (const auto& z : rho.matrix().entries()) s += std::norm(z);
  return s;
}

MeasureRecord measure_all(const DensityMatrix& state, const DensityMatrix& reference) {
  return {
      .st = steerability(state),
      .bn = bell_nonlocality(state),
      .cn = concurrence(state),
      .pr = purity(state),
      .ew = entanglement_witness(state, reference),
  };
}

} // namespace gravcat
