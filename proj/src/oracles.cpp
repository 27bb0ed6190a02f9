#include "gravcat/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gravcat/channels.hpp"
#include "gravcat/measures.hpp"

namespace gravcat::oracle {

namespace {

std::array<Matrix2, 3> paulis() { return {pauli::x(), pauli::y(), pauli::z()}; }

double expectation(const Matrix4& rho, const Matrix4& op) { return (rho * op).trace().real(); }

double shannon(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

// Composite 20-point Gauss-Legendre on equal panels.
double integrate(const std::function<double(double)>& f, double a, double b, int panels = 24) {
  if (b <= a) return 0.0;
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int k = 0; k < panels; ++k) {
    sum += boost::math::quadrature::gauss<double, 20>::integrate(f, a + k * h, a + (k + 1) * h);
  }
  return sum;
}


// The spin-flip route to the concurrence takes square roots of eigenvalues that
// can sit at the rounding level, so it runs in quad precision on the real 8x8
// representation [[Re, -Im], [Im, Re]] (each eigenvalue appears twice).
using Quad = boost::multiprecision::cpp_bin_float_quad;
using Real8 = std::array<std::array<Quad, 8>, 8>;

Real8 realify(const Matrix4& m) {
  Real8 r;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const complex z = m(i, j);
      r[i][j] = r[i + 4][j + 4] = z.real();
      r[i + 4][j] = z.imag();
      r[i][j + 4] = -z.imag();
    }
  return r;
}

Real8 multiply(const Real8& a, const Real8& b) {
  Real8 c;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Quad s = 0;
      for (std::size_t k = 0; k < 8; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

// Cyclic Jacobi: diagonalises symmetric `a` in place, accumulating rotations in `v`.
void symmetric_jacobi(Real8& a, Real8& v) {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) v[i][j] = i == j ? 1 : 0;
  const Quad tiny = std::numeric_limits<Quad>::epsilon() * std::numeric_limits<Quad>::epsilon();
  for (int sweep = 0; sweep < 100; ++sweep) {
    Quad off = 0, total = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) (i == j ? total : off) += a[i][j] * a[i][j];
    total += off;
    if (off <= tiny * total) return;
    for (std::size_t p = 0; p < 7; ++p)
      for (std::size_t q = p + 1; q < 8; ++q) {
        if (a[p][q] == 0) continue;
        const Quad theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const Quad t = (theta >= 0 ? 1 : -1) / (abs(theta) + sqrt(theta * theta + 1));
        const Quad c = 1 / sqrt(t * t + 1);
        const Quad s = t * c;
        for (std::size_t k = 0; k < 8; ++k) {
          const Quad kp = a[k][p], kq = a[k][q];
          a[k][p] = c * kp - s * kq;
          a[k][q] = s * kp + c * kq;
        }
        for (std::size_t k = 0; k < 8; ++k) {
          const Quad pk = a[p][k], qk = a[q][k];
          a[p][k] = c * pk - s * qk;
          a[q][k] = s * pk + c * qk;
        }
        for (std::size_t k = 0; k < 8; ++k) {
          const Quad kp = v[k][p], kq = v[k][q];
          v[k][p] = c * kp - s * kq;
          v[k][q] = s * kp + c * kq;
        }
      }
  }
  throw ConvergenceError("symmetric_jacobi: no convergence");
}

} // namespace

Matrix4 thermal_by_expm(const ModelParams& p) {
  const Matrix4 boltzmann = expm_hermitian(hamiltonian(p), -1.0 / p.temperature);
  return boltzmann * complex(1.0 / boltzmann.trace().real());
}

double thermal_purity_by_spectrum(const ModelParams& p) {
  const auto e = energies(p);
  const double e_min = *std::min_element(e.begin(), e.end());
  std::array<double, 4> w{};
  double z = 0.0;
  for (std::size_t i = 0; i < 4; ++i) z += w[i] = std::exp(-(e[i] - e_min) / p.temperature);
  double s = 0.0;
  for (double wi : w) s += (wi / z) * (wi / z);
  return s;
}

BlochData bloch_by_contraction(const Matrix4& rho) {
  const auto s = paulis();
  const Matrix2 id = pauli::identity();
  BlochData d;
  for (std::size_t i = 0; i < 3; ++i) {
    d.a[i] = expectation(rho, kron(s[i], id));
    d.b[i] = expectation(rho, kron(id, s[i]));
    for (std::size_t j = 0; j < 3; ++j) d.c[i][j] = expectation(rho, kron(s[i], s[j]));
  }
  return d;
}

double steering_by_conditional_entropy(const Matrix4& rho) {
  const Matrix2 id = pauli::identity();
  double conditional_sum = 0.0;
  for (const Matrix2& sigma : paulis()) {
    // Projectors onto the +1 / -1 eigenspaces.
    const std::array<Matrix2, 2> proj = {0.5 * (id + sigma), 0.5 * (id - sigma)};
    std::array<double, 4> joint{};
    std::array<double, 2> marginal_a{};
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const double p = std::max(0.0, expectation(rho, kron(proj[a], proj[b])));
        joint[2 * a + b] = p;
        marginal_a[a] += p;
      }
    conditional_sum += shannon(joint) - shannon(marginal_a);
  }
  return 6.0 - 2.0 * conditional_sum;
}

double chsh_by_horodecki(const Matrix4& rho) {
  const BlochData d = bloch_by_contraction(rho);
  // T^T T, embedded in a 4x4 Hermitian matrix with an extra zero eigenvalue.
  Matrix4 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += d.c[k][i] * d.c[k][j];
      m(i, j) = s;
    }
  const auto eig = herm_eig(m);
  return 2.0 * std::sqrt(std::max(0.0, eig[3].value + eig[2].value));
}

double concurrence_by_wootters(const Matrix4& rho) {
  const Matrix4 flip = kron(pauli::y(), pauli::y());
  const Real8 tilde = realify(flip * rho.conjugate() * flip);

  Real8 d = realify(rho);
  Real8 v;
  symmetric_jacobi(d, v);
  Real8 root;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Quad s = 0;
      for (std::size_t k = 0; k < 8; ++k) s += v[i][k] * sqrt(d[k][k] > 0 ? d[k][k] : Quad(0)) * v[j][k];
      root[i][j] = s;
    }

  Real8 r = multiply(multiply(root, tilde), root);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < i; ++j) r[i][j] = r[j][i] = (r[i][j] + r[j][i]) / 2;
  symmetric_jacobi(r, v);
  std::array<Quad, 8> e;
  for (std::size_t i = 0; i < 8; ++i) e[i] = r[i][i] > 0 ? sqrt(r[i][i]) : Quad(0);
  std::sort(e.begin(), e.end(), std::greater<>());
  const Quad c = e[0] - e[2] - e[4] - e[6];
  return c > 0 ? static_cast<double>(c) : 0.0;
}

double beta_by_quadrature(double g, double alpha, double tau, double kernel_exponent) {
  const double exponent = kernel_exponent > 0.0 ? kernel_exponent : alpha;
  const auto kernel = [=](double lag) { return g * (alpha - 1.0) / (2.0 * std::pow(1.0 + g * lag, exponent)); };

  // Lags are integrated in w = ln(1 + g lag), so lag = (e^w - 1)/g and
  // d lag = e^w / g dw; the same map is used on each half of the outer variable.
  const auto lag_of = [g](double w) { return std::expm1(w) / g; };
  const auto jacobian = [g](double w) { return std::exp(w) / g; };

  // Integral over s' in [0, tau] of K(|s - s'|), split at s' = s.
  const auto inner = [&](double s) {
    const auto f = [&](double w) { return kernel(lag_of(w)) * jacobian(w); };
    return integrate(f, 0.0, std::log1p(g * s)) + integrate(f, 0.0, std::log1p(g * (tau - s)));
  };

  // Outer integral on [0, tau/2] and [tau/2, tau], each mapped from its endpoint.
  const double half = 0.5 * tau;
  const double w_max = std::log1p(g * half);
  const double left = integrate([&](double w) { return inner(lag_of(w)) * jacobian(w); }, 0.0, w_max);
  const double right = integrate([&](double w) { return inner(tau - lag_of(w)) * jacobian(w); }, 0.0, w_max);
  return left + right;
}

ModelParams ThermalSampler::operator()(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> param(param_lo, param_hi);
  std::uniform_real_distribution<double> temp(t_lo, t_hi);
  ModelParams p;
  p.omega = param(rng);
  p.gamma = param(rng);
  p.temperature = temp(rng);
  return p;
}

std::vector<CheckResult> run_selfcheck(std::size_t count, std::uint64_t seed) {
  CheckResult ew{"EW closed form vs direct trace", 0.0, 1e-10, 0};
  CheckResult steer{"steering value vs 6 - 2 sum H(b|a)", 0.0, 1e-10, 0};
  CheckResult chsh{"CHSH value vs Horodecki", 0.0, 1e-10, 0};
  CheckResult cn{"concurrence vs Wootters", 0.0, 1e-10, 0};
  CheckResult thermal{"thermal entries vs matrix exponential", 0.0, 1e-10, 0};
  CheckResult pr{"purity vs Boltzmann weights", 0.0, 1e-12, 0};

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ThermalSampler sample;
  for (std::size_t n = 0; n < count; ++n) {
    const ModelParams p = sample(rng);
    const DensityMatrix rho = thermal_state(p);

    FieldParams field;
    field.coupling = unit(rng);
    field.stochastic_sign = 2.0 * unit(rng) - 1.0;
    field.time = 10.0 * unit(rng);
    const DensityMatrix evolved = evolve_constant_field(rho, field);
    const double phase = 4.0 * field.stochastic_sign * field.coupling * field.time;
    ew.max_error = std::max(ew.max_error, std::abs(ew_closed_form(p, phase) - entanglement_witness(evolved, rho)));

    steer.max_error = std::max(
        steer.max_error, std::abs(steering_value(bloch_x(rho)) - steering_by_conditional_entropy(rho.matrix())));
    chsh.max_error = std::max(chsh.max_error, std::abs(chsh_value(rho) - chsh_by_horodecki(rho.matrix())));
    cn.max_error = std::max(cn.max_error, std::abs(concurrence(rho) - concurrence_by_wootters(rho.matrix())));
    thermal.max_error = std::max(thermal.max_error, max_abs_diff(rho.matrix(), thermal_by_expm(p)));
    pr.max_error = std::max(pr.max_error, std::abs(purity(rho) - thermal_purity_by_spectrum(p)));
  }
  for (CheckResult* r : {&ew, &steer, &chsh, &cn, &thermal, &pr}) r->samples = count;

  CheckResult beta{"beta function vs double quadrature (relative)", 0.0, 1e-6, 0};
  for (double g : {1e-4, 1e-2, 1.0})
    for (double alpha : {1.5, 2.1, 3.0})
      for (double tau : {0.1, 10.0, 1e4}) {
        const double closed = beta_pl({g, alpha, tau});
        const double numeric = beta_by_quadrature(g, alpha, tau);
        beta.max_error = std::max(beta.max_error, std::abs(closed - numeric) / std::abs(numeric));
        ++beta.samples;
      }

  CheckResult qwm{"reversal closed form vs conjugation", 0.0, 1e-12, 0};
  for (std::size_t n = 0; n < 100; ++n) {
    const DensityMatrix rho = thermal_state(sample(rng));
    const ReversalParams rp{0.99 * unit(rng)};
    const Matrix2 q = reversal_operator(rp);
    const DensityMatrix direct = conjugate_map(kron(q, q), rho, Renormalize::yes);
    qwm.max_error = std::max(qwm.max_error, max_abs_diff(qwm_reverse(rho, rp).matrix(), direct.matrix()));
    ++qwm.samples;
  }

  return {thermal, pr, ew, steer, chsh, cn, beta, qwm};
}

} // namespace gravcat::oracle
