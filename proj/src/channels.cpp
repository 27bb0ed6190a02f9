#include "gravcat/channels.hpp"

#include <cmath>
#include <string>

namespace gravcat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void validate(const FieldParams& f) {
  require(std::isfinite(f.energy), "field: energy must be finite");
  require(f.coupling >= 0.0 && std::isfinite(f.coupling), "field: coupling lambda must be >= 0");
  require(f.stochastic_sign >= -1.0 && f.stochastic_sign <= 1.0, "field: delta must lie in [-1, 1]");
  require(f.time >= 0.0 && std::isfinite(f.time), "field: time must be >= 0");
}

void validate(const DecayParams& d) {
  require(d.coupling >= 0.0 && std::isfinite(d.coupling), "decay: coupling mu must be >= 0");
  require(d.decay_rate >= 0.0 && std::isfinite(d.decay_rate), "decay: rate chi must be >= 0");
}

void validate(const NoiseParams& n) {
  require(n.g > 0.0 && std::isfinite(n.g), "noise: g must be > 0");
  require(n.alpha > 1.0 && std::isfinite(n.alpha), "noise: alpha must be > 1");
  require(n.tau >= 0.0 && std::isfinite(n.tau), "noise: tau must be >= 0");
}

// rho with rho_14 -> factor * rho_14 and rho_41 -> conj(factor) * rho_41.
DensityMatrix scale_outer_coherence(const DensityMatrix& rho, complex factor) {
  Matrix4 m = rho.matrix();
  m(0, 3) *= factor;
  m(3, 0) *= std::conj(factor);
  return DensityMatrix(m);
}

// Integral of (x - v)(1 + v)^{-alpha} over [0, x] as a binomial series; used
// where the closed form cancels catastrophically.
double small_x_kernel_integral(double x, double alpha) {
  double coeff = 1.0; // binom(-alpha, k)
  double power = x * x;
  double sum = 0.0;
  for (int k = 0; k < 400; ++k) {
    const double term = coeff * power / ((k + 1.0) * (k + 2.0));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    coeff *= (-alpha - k) / (k + 1.0);
    power *= x;
  }
  return sum;
}

} // namespace

bool is_x_shaped(const Matrix4& m, double tol) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool on_x = i == j || i + j == 3;
      if (!on_x && std::abs(m(i, j)) > tol) return false;
    }
  return true;
}

void require_x_shaped(const DensityMatrix& rho, const char* who) {
  if (!is_x_shaped(rho.matrix())) throw StateError(std::string(who) + ": input state is not X-shaped");
}

Matrix4 stochastic_unitary(const FieldParams& f) {
  const double t = f.time;
  const double shift = 2.0 * f.stochastic_sign * f.coupling;
  auto phase = [t](double energy) { return std::polar(1.0, -t * energy); };
  return Matrix4::diagonal({phase(2.0 * f.energy + shift), phase(2.0 * f.energy), phase(2.0 * f.energy),
                            phase(2.0 * f.energy - shift)});
}

DensityMatrix evolve_constant_field(const DensityMatrix& rho0, const FieldParams& f) {
  validate(f);
  require_x_shaped(rho0, "evolve_constant_field");
  const double phi = 4.0 * f.stochastic_sign * f.coupling * f.time;
  return scale_outer_coherence(rho0, std::polar(1.0, -phi));
}

double decaying_phase(const FieldParams& f, const DecayParams& d, DecayMode mode) {
  validate(d);
  const double t = f.time;
  const double four_delta_mu = 4.0 * f.stochastic_sign * d.coupling;
  switch (mode) {
  case DecayMode::literal:
    return four_delta_mu * std::exp(-d.decay_rate * t) * t;
  case DecayMode::integrated:
    if (d.decay_rate == 0.0) return four_delta_mu * t;
    return four_delta_mu * -std::expm1(-d.decay_rate * t) / d.decay_rate;
  }
  return 0.0;
}

DensityMatrix evolve_decaying_field(const DensityMatrix& rho0, const FieldParams& f, const DecayParams& d,
                                    DecayMode mode) {
  FieldParams checked = f;
  checked.coupling = 0.0;
  validate(checked);
  require_x_shaped(rho0, "evolve_decaying_field");
  return scale_outer_coherence(rho0, std::polar(1.0, -decaying_phase(f, d, mode)));
}

double beta_pl(const NoiseParams& n) {
  validate(n);
  const double x = n.g * n.tau;
  if (x == 0.0) return 0.0;
  if (x * std::max(n.alpha, 1.0) < 0.1) {
    return (n.alpha - 1.0) / n.g * small_x_kernel_integral(x, n.alpha);
  }
  // [(alpha-2)x - 1 + (1+x)^{2-alpha}] / (alpha-2) = x - expm1(eps L)/eps,
  // eps = 2 - alpha, L = ln(1+x); the ratio tends to L as eps -> 0.
  const double log1p_x = std::log1p(x);
  const double eps = 2.0 - n.alpha;
  const double el = eps * log1p_x;
  const double ratio = std::abs(el) < 1e-8 ? log1p_x * (1.0 + 0.5 * el) : std::expm1(el) / eps;
  return (x - ratio) / n.g;
}

double pl_coherence_factor(const NoiseParams& n) { return std::exp(-8.0 * beta_pl(n)); }

DensityMatrix dephase_pl(const DensityMatrix& rho0, const NoiseParams& n) {
  const double factor = pl_coherence_factor(n);
  require_x_shaped(rho0, "dephase_pl");
  return scale_outer_coherence(rho0, factor);
}

Matrix2 reversal_operator(const ReversalParams& rp) {
  require(rp.strength >= 0.0 && rp.strength <= 1.0, "reversal: strength r must lie in [0, 1]");
  return {1.0, 0.0, 0.0, std::sqrt(1.0 - rp.strength)};
}

DensityMatrix qwm_reverse(const DensityMatrix& rho, const ReversalParams& rp) {
  require(rp.strength >= 0.0 && rp.strength <= 1.0, "reversal: strength r must lie in [0, 1]");
  require_x_shaped(rho, "qwm_reverse");
  const double keep = 1.0 - rp.strength; // |1 - r|
  const auto& m = rho.matrix();
  const double r11 = m(0, 0).real();
  const double r22 = m(1, 1).real();
  const double r33 = m(2, 2).real();
  const double r44 = m(3, 3).real();
  const double kappa = r11 + (r22 + r33) * keep + r44 * keep * keep;
  if (!(kappa > 1e-300)) throw StateAnnihilatedError("qwm_reverse: reversal annihilated the state");

  Matrix4 out;
  out(0, 0) = r11 / kappa;
  out(1, 1) = r22 * keep / kappa;
  out(2, 2) = r33 * keep / kappa;
  out(3, 3) = r44 * keep * keep / kappa;
  out(0, 3) = m(0, 3) * keep / kappa;
  out(3, 0) = m(3, 0) * keep / kappa;
  out(1, 2) = m(1, 2) * keep / kappa;
  out(2, 1) = m(2, 1) * keep / kappa;
  return DensityMatrix(out);
}

} // namespace gravcat
