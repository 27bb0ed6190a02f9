#pragma once

// State maps applied to the thermal gravcat state: a common classical
// stochastic field (constant or decaying coupling), power-law noise dephasing
// and weak-measurement reversal.

#include "gravcat/smallmat.hpp"

namespace gravcat {

/// Common classical field acting on both qubits, H_k = E I + lambda delta sz.
struct FieldParams {
  double energy = 1.0;          ///< single-qubit energy E
  double coupling = 0.0;        ///< lambda >= 0
  double stochastic_sign = 1.0; ///< delta in [-1, 1]
  double time = 0.0;            ///< t >= 0
};

/// Coupling that decays as mu exp(-chi t).
struct DecayParams {
  double coupling = 0.0;   ///< mu >= 0
  double decay_rate = 0.0; ///< chi >= 0
};

enum class DecayMode {
  /// Substitute lambda -> mu e^{-chi t} in the accumulated phase 4 delta lambda t.
  literal,
  /// Integrate the coupling: phase 4 delta mu (1 - e^{-chi t}) / chi.
  integrated,
};

/// Power-law noise in scaled units.
struct NoiseParams {
  double g = 1e-4;    ///< theta / zeta > 0
  double alpha = 2.1; ///< autocorrelation exponent > 1
  double tau = 0.0;   ///< zeta t >= 0
};

struct ReversalParams {
  double strength = 0.0; ///< r in [0, 1]
};

/// An entry counts as zero when its modulus is at most this.
inline constexpr double kXShapeTolerance = 1e-12;

bool is_x_shaped(const Matrix4& m, double tol = kXShapeTolerance);

/// Throws StateError unless rho is X-shaped.
void require_x_shaped(const DensityMatrix& rho, const char* who);

/// diag(e^{-it(2E+2 delta lambda)}, e^{-2itE}, e^{-2itE}, e^{-it(2E-2 delta lambda)}).
Matrix4 stochastic_unitary(const FieldParams& f);

/// U rho U^dagger for the constant field; only rho_14 / rho_41 pick up the
/// phase e^{-/+ 4 i delta lambda t}.
DensityMatrix evolve_constant_field(const DensityMatrix& rho0, const FieldParams& f);

/// Accumulated phase of rho_14 under the decaying coupling.
double decaying_phase(const FieldParams& f, const DecayParams& d, DecayMode mode = DecayMode::literal);

/// Constant-field evolution with the coupling replaced by mu e^{-chi t}.
/// f.coupling is ignored.
DensityMatrix evolve_decaying_field(const DensityMatrix& rho0, const FieldParams& f, const DecayParams& d,
                                    DecayMode mode = DecayMode::literal);

/// beta(tau) = [g tau (alpha-2) - 1 + (1 + g tau)^{2-alpha}] / ((alpha-2) g),
/// with the limit (g tau - ln(1 + g tau)) / g at alpha = 2.
double beta_pl(const NoiseParams& n);

/// e^{-8 beta(tau)}
double pl_coherence_factor(const NoiseParams& n);

/// Multiplies rho_14 and rho_41 by e^{-8 beta(tau)}.
DensityMatrix dephase_pl(const DensityMatrix& rho0, const NoiseParams& n);

/// Q = diag(1, sqrt(1-r)) on each qubit.
Matrix2 reversal_operator(const ReversalParams& rp);

/// (Q x Q) rho (Q x Q)^dagger / trace, evaluated entrywise on the X pattern.
/// Throws StateAnnihilatedError when the trace vanishes (rho_11 = 0, r = 1).
DensityMatrix qwm_reverse(const DensityMatrix& rho, const ReversalParams& rp);

} // namespace gravcat
