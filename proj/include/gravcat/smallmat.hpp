#pragma once

// Fixed-size complex matrices (2x2 and 4x4) with the handful of operations the
// two-qubit simulation needs: products, Kronecker products, a Hermitian
// eigensolver and functions of Hermitian matrices.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>

#include "gravcat/errors.hpp"

namespace gravcat {

using complex = std::complex<double>;

template <std::size_t N>
using Vector = std::array<complex, N>;

template <std::size_t N>
class Matrix {
public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() : data_{} {}

  /// Row-major construction; the list must hold exactly N*N entries.
  Matrix(std::initializer_list<complex> entries) : data_{} {
    if (entries.size() != N * N) {
      throw ParameterError("Matrix: expected " + std::to_string(N * N) + " entries, got " +
                           std::to_string(entries.size()));
    }
    std::copy(entries.begin(), entries.end(), data_.begin());
  }

  static Matrix zero() { return Matrix(); }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  /// |v><w|
  static Matrix outer(const Vector<N>& v, const Vector<N>& w) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = v[i] * std::conj(w[j]);
    return m;
  }

  complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  std::span<const complex, N * N> entries() const { return data_; }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  Matrix conjugate() const {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = std::conj(data_[k]);
    return m;
  }

  complex trace() const {
    complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double r = 0.0;
    for (const auto& z : data_) r = std::max(r, std::abs(z));
    return r;
  }

  /// max |M - M^dagger|
  double hermiticity_defect() const {
    double r = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return r;
  }

  Matrix hermitian_part() const {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return m;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, complex s) { return a *= s; }
  friend Matrix operator*(complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const complex aik = a(i, k);
        if (aik == complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> r{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::array<complex, N * N> data_;
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

namespace pauli {
inline Matrix2 identity() { return Matrix2::identity(); }
inline Matrix2 x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Matrix2 y() { return {0.0, complex(0.0, -1.0), complex(0.0, 1.0), 0.0}; }
inline Matrix2 z() { return {1.0, 0.0, 0.0, -1.0}; }
} // namespace pauli

/// Kronecker product: kron(A,B)[2i+k][2j+l] = A[i][j] * B[k][l].
/// Operand sizes are fixed by the type, so a dimension mismatch does not compile.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Maximum entrywise distance.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  return (a - b).max_abs();
}

template <std::size_t N>
complex inner(const Vector<N>& a, const Vector<N>& b) {
  complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  return std::sqrt(inner(v, v).real());
}

template <std::size_t N>
struct EigenPair {
  double value;
  Vector<N> vector;
};

template <std::size_t N>
using EigenSystem = std::array<EigenPair<N>, N>;

/// Inputs whose Hermiticity defect is at most this are symmetrized; larger
/// defects are rejected.
inline constexpr double kHermitianInputTolerance = 1e-10;

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Eigenvalues come out ascending. Each eigenvector is scaled so that its first
/// component with modulus above 1e-12 is real and positive. Eigenvalues within
/// a few ulps of the matrix scale count as tied and are ordered by the index of
/// that first component, then by its size (larger first).
///
/// Throws StateError for non-Hermitian input and ConvergenceError if the
/// rotations fail to reduce the off-diagonal part.
template <std::size_t N>
EigenSystem<N> herm_eig(const Matrix<N>& m);

extern template EigenSystem<2> herm_eig<2>(const Matrix<2>&);
extern template EigenSystem<4> herm_eig<4>(const Matrix<4>&);

/// Sum_i f(e_i) v_i v_i^dagger over the eigenpairs of a Hermitian matrix.
template <std::size_t N, class F>
Matrix<N> hermitian_function(const Matrix<N>& m, F&& f) {
  const auto eig = herm_eig(m);
  Matrix<N> out;
  for (const auto& [value, vec] : eig) out += Matrix<N>::outer(vec, vec) * complex(f(value));
  return out;
}

/// exp(scale * M) for Hermitian M. Throws OverflowError naming the exponent
/// when scale * e_i exceeds the range of exp.
template <std::size_t N>
Matrix<N> expm_hermitian(const Matrix<N>& m, double scale);

extern template Matrix<2> expm_hermitian<2>(const Matrix<2>&, double);
extern template Matrix<4> expm_hermitian<4>(const Matrix<4>&, double);

/// Validated two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
public:
  struct Tolerances {
    double hermitian = 1e-12;
    double trace = 1e-12;
    double psd = 1e-10;
  };

  /// Validates against default tolerances; throws StateError on violation.
  explicit DensityMatrix(const Matrix4& m) : DensityMatrix(m, Tolerances{}) {}
  DensityMatrix(const Matrix4& m, const Tolerances& tol);

  static DensityMatrix maximally_mixed();
  /// |psi><psi| / <psi|psi>
  static DensityMatrix projector(const Vector<4>& psi);

  const Matrix4& matrix() const { return m_; }
  const complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

private:
  Matrix4 m_;
};

enum class Renormalize { no, yes };

/// A rho A^dagger, optionally divided by its trace.
/// Throws StateAnnihilatedError when renormalizing a trace <= 1e-300.
DensityMatrix conjugate_map(const Matrix4& a, const DensityMatrix& rho,
                            Renormalize renormalize = Renormalize::no);

} // namespace gravcat
