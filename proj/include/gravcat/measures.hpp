#pragma once

// Correlation and purity estimators for two-qubit X states.

#include "gravcat/model.hpp"
#include "gravcat/smallmat.hpp"

namespace gravcat {

/// Bloch data of an X state: A1 = A2 = B1 = B2 = 0 and C_ij = 0 for i != j.
struct XStateCoefficients {
  double a3 = 0.0;
  double b3 = 0.0;
  double c11 = 0.0;
  double c22 = 0.0;
  double c33 = 0.0;
};

struct MeasureRecord {
  double st = 0.0; ///< one-way steerability, [0, 1]
  double bn = 0.0; ///< normalized Bell non-locality, [0, 1]
  double cn = 0.0; ///< concurrence, [0, 1]
  double pr = 0.0; ///< purity, [1/4, 1]
  double ew = 0.0; ///< entanglement witness, > 0 flags entanglement
};

/// Largest steering value, attained by the Bell states.
inline constexpr double kMaxSteeringValue = 6.0;

XStateCoefficients bloch_x(const DensityMatrix& rho);

/// Tr[ref * state] - 1/2, i.e. -Tr[(I/2 - ref) state].
double entanglement_witness(const DensityMatrix& state, const DensityMatrix& reference);

/// Closed-form witness for the thermal state against its own t = 0 state when
/// rho_14 has accumulated the phase `phase` (4 delta lambda t for the constant
/// field). Evaluated with every exponential scaled by e^{-2K/T}.
double ew_closed_form(const ModelParams& p, double phase);

/// Entropic steering value for three Pauli settings, in [0, 6]:
///   sum_{i=1,2} [(1-C_ii)log2(1-C_ii) + (1+C_ii)log2(1+C_ii)] - X1 + (X2+X3+X4+X5)/2
double steering_value(const XStateCoefficients& x);

/// max[0, (I - 2) / (6 - 2)]
double steerability(const DensityMatrix& rho);

/// 2 max{2 sqrt2 b1, b2} with b1 = sqrt(|r14|^2 + |r23|^2),
/// b2 = sqrt(4(|r14| + |r23|)^2 + C33^2).
double chsh_value(const DensityMatrix& rho);

/// max[0, (B - 2) / (2 sqrt2 - 2)]
double bell_nonlocality(const DensityMatrix& rho);

/// 2 max[0, |r23| - sqrt(r11 r44), |r14| - sqrt(r22 r33)]
double concurrence(const DensityMatrix& rho);

/// Tr[rho^2]
double purity(const DensityMatrix& rho);

MeasureRecord measure_all(const DensityMatrix& state, const DensityMatrix& reference);

} // namespace gravcat
