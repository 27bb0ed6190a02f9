#pragma once

#include <cmath>
#include <random>

#include "gravcat/smallmat.hpp"

namespace testing {

using namespace gravcat;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(7);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline complex random_complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

template <std::size_t N>
Matrix<N> random_matrix() {
  Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = random_complex();
  return m;
}

template <std::size_t N>
Matrix<N> random_hermitian() {
  return random_matrix<N>().hermitian_part();
}

/// Gram-Schmidt on random columns.
template <std::size_t N>
Matrix<N> random_unitary() {
  std::array<Vector<N>, N> cols;
  for (std::size_t c = 0; c < N; ++c) {
    for (auto& z : cols[c]) z = random_complex();
    for (std::size_t p = 0; p < c; ++p) {
      const complex overlap = inner(cols[p], cols[c]);
      for (std::size_t i = 0; i < N; ++i) cols[c][i] -= overlap * cols[p][i];
    }
    const double n = norm(cols[c]);
    for (auto& z : cols[c]) z /= n;
  }
  Matrix<N> u;
  for (std::size_t c = 0; c < N; ++c)
    for (std::size_t i = 0; i < N; ++i) u(i, c) = cols[c][i];
  return u;
}

/// Random valid X state with real coherences.
inline DensityMatrix random_x_state() {
  std::array<double, 4> p{};
  double total = 0.0;
  for (double& v : p) total += v = uniform(0.01, 1.0);
  for (double& v : p) v /= total;
  const double r14 = uniform(-1.0, 1.0) * std::sqrt(p[0] * p[3]);
  const double r23 = uniform(-1.0, 1.0) * std::sqrt(p[1] * p[2]);
  return DensityMatrix(Matrix4{p[0], 0, 0, r14, 0, p[1], r23, 0, 0, r23, p[2], 0, r14, 0, 0, p[3]});
}

inline Vector<4> bell_phi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, 0.0, 0.0, s};
}

} // namespace testing
