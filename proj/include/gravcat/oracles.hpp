#pragma once

// Independent reference computations. Nothing here calls the closed forms it is
// meant to check: each routine works from the Hamiltonian, the raw density
// matrix or the noise kernel by brute force (matrix functions, trace
// contractions, numerical quadrature).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gravcat/model.hpp"
#include "gravcat/smallmat.hpp"

namespace gravcat::oracle {

/// exp(-H/T) / Tr exp(-H/T) by eigendecomposition.
Matrix4 thermal_by_expm(const ModelParams& p);

/// Tr[rho^2] of the Gibbs state from Boltzmann weights of the closed-form levels.
double thermal_purity_by_spectrum(const ModelParams& p);

/// Full correlation data by trace contraction: a[i] = Tr[rho s_i x I],
/// b[i] = Tr[rho I x s_i], c[i][j] = Tr[rho s_i x s_j].
struct BlochData {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  std::array<std::array<double, 3>, 3> c{};
};
BlochData bloch_by_contraction(const Matrix4& rho);

/// 6 - 2 sum_i H(s_i^b | s_i^a), with the joint outcome distributions obtained
/// from projective measurements on rho.
double steering_by_conditional_entropy(const Matrix4& rho);

/// 2 sqrt(u1 + u2), u1, u2 the two largest eigenvalues of T^T T.
double chsh_by_horodecki(const Matrix4& rho);

/// max[0, l1 - l2 - l3 - l4] from the spin-flipped matrix.
double concurrence_by_wootters(const Matrix4& rho);

/// Double integral over [0, tau]^2 of the power-law autocorrelation
///   g (alpha - 1) / (2 [1 + g |s - s'|]^exponent)
/// in scaled time (zeta = 1, theta = g). `kernel_exponent` defaults to alpha.
double beta_by_quadrature(double g, double alpha, double tau, double kernel_exponent = 0.0);

/// Random thermal parameters: omega, gamma uniform in [lo, hi], T uniform in [t_lo, t_hi].
struct ThermalSampler {
  double param_lo = 0.2;
  double param_hi = 5.0;
  double t_lo = 0.05;
  double t_hi = 3.0;

  ModelParams operator()(std::mt19937_64& rng) const;
};

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;

  bool passed() const { return max_error <= tolerance; }
};

/// Closed form versus oracle over `count` random thermal states, plus the
/// beta-function quadrature grid and the reversal conjugation check.
std::vector<CheckResult> run_selfcheck(std::size_t count = 1000, std::uint64_t seed = 20240611);

} // namespace gravcat::oracle
