#pragma once

// Two gravitationally coupled cat-state qubits:
//   H = (omega/2)(sz x I + I x sz) - gamma (sx x sx)
// and its Gibbs state at temperature T (k_B = 1).

#include <array>

#include "gravcat/smallmat.hpp"

namespace gravcat {

struct ModelParams {
  double omega = 1.0;       ///< gap between |e> and |g>
  double gamma = 1.0;       ///< gravitational coupling, same units as omega
  double temperature = 1.0; ///< T > 0

  /// K = sqrt(gamma^2 + omega^2)
  double coupling_norm() const;
};

/// gamma = (G m^2 / 2)(1/x - 1/x').
double gamma_from_masses(double G, double mass, double x, double x_prime);

/// Real symmetric: diagonal (omega, 0, 0, -omega), anti-diagonal -gamma.
/// The temperature is not used.
Matrix4 hamiltonian(const ModelParams& p);

struct Eigenstate {
  double energy;
  Vector<4> state;
};

/// Labeled levels: E0 = -gamma, E1 = gamma, E2 = -K, E3 = K.
struct Spectrum {
  std::array<Eigenstate, 4> levels;

  const Eigenstate& operator[](std::size_t i) const { return levels[i]; }
};

/// Closed-form energies (E0, E1, E2, E3); defined for every (omega, gamma).
std::array<double, 4> energies(const ModelParams& p);

/// Closed-form eigenpairs in the computational basis |00>,|01>,|10>,|11>.
/// Throws ParameterError when omega = gamma = 0 (psi2, psi3 undefined).
Spectrum spectrum(const ModelParams& p);

/// Arguments K/T or |gamma|/T above this raise OverflowError.
inline constexpr double kMaxThermalExponent = 700.0;

/// Z = 2[cosh(K/T) + cosh(gamma/T)].
double partition_function(const ModelParams& p);

/// The X-shaped thermal state exp(-H/T)/Z with real entries.
/// Requires T > 0 and omega >= 0; omega = gamma = 0 gives I/4.
DensityMatrix thermal_state(const ModelParams& p);

} // namespace gravcat
