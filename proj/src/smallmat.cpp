#include "gravcat/smallmat.hpp"

#include <cstdio>
#include <limits>

namespace gravcat {

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

namespace {

constexpr double kNegligibleComponent = 1e-12;
constexpr int kMaxSweeps = 64;

template <std::size_t N>
double frobenius(const Matrix<N>& m) {
  double s = 0.0;
  for (const auto& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

template <std::size_t N>
std::size_t leading_index(const Vector<N>& v) {
  for (std::size_t i = 0; i < N; ++i)
    if (std::abs(v[i]) > kNegligibleComponent) return i;
  return N;
}

// Rotate the global phase so the leading component is real positive.
template <std::size_t N>
void fix_phase(Vector<N>& v) {
  const std::size_t lead = leading_index(v);
  if (lead == N) return;
  const complex phase = std::conj(v[lead]) / std::abs(v[lead]);
  for (auto& z : v) z *= phase;
  v[lead] = std::abs(v[lead]);
}

} // namespace

template <std::size_t N>
EigenSystem<N> herm_eig(const Matrix<N>& input) {
  if (!input.all_finite()) throw StateError("herm_eig: matrix has non-finite entries");
  const double defect = input.hermiticity_defect();
  if (defect > kHermitianInputTolerance) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "herm_eig: matrix is not Hermitian (defect %.3e)", defect);
    throw StateError(buf);
  }

  Matrix<N> a = input.hermitian_part();
  Matrix<N> v = Matrix<N>::identity();
  const double scale = frobenius(a);

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const complex b = a(p, q);
        const double abs_b = std::abs(b);
        if (abs_b <= std::numeric_limits<double>::min() || abs_b <= 1e-18 * scale) continue;

        const complex phase = std::conj(b) / abs_b; // e^{-i arg b}
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_b);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        Matrix<N> g = Matrix<N>::identity();
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * phase;
        g(q, q) = c * phase;

        a = g.adjoint() * a * g;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * g;
      }
    }
    a = a.hermitian_part();
  }
  if (!converged && off_diagonal_norm(a) > 1e-15 * scale) {
    throw ConvergenceError("herm_eig: Jacobi rotations did not converge");
  }

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out[k].value = a(k, k).real();
    for (std::size_t i = 0; i < N; ++i) out[k].vector[i] = v(i, k);
    fix_phase(out[k].vector);
  }

  std::sort(out.begin(), out.end(), [](const EigenPair<N>& x, const EigenPair<N>& y) { return x.value < y.value; });

  // Degenerate eigenvalues come out of the rotations in arbitrary order; order
  // each run of (numerically) equal values by where its vectors start.
  const double tie = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale);
  const auto by_leading = [](const EigenPair<N>& x, const EigenPair<N>& y) {
    const std::size_t ix = leading_index(x.vector);
    const std::size_t iy = leading_index(y.vector);
    if (ix != iy) return ix < iy;
    if (ix == N) return false;
    return x.vector[ix].real() > y.vector[iy].real();
  };
  for (std::size_t begin = 0; begin < N;) {
    std::size_t end = begin + 1;
    while (end < N && out[end].value - out[end - 1].value <= tie) ++end;
    std::sort(out.begin() + begin, out.begin() + end, by_leading);
    begin = end;
  }
  return out;
}

template EigenSystem<2> herm_eig<2>(const Matrix<2>&);
template EigenSystem<4> herm_eig<4>(const Matrix<4>&);

template <std::size_t N>
Matrix<N> expm_hermitian(const Matrix<N>& m, double scale) {
  // exp overflows just above 709.78
  constexpr double kMaxExponent = 709.0;
  return hermitian_function(m, [scale](double e) {
    const double x = scale * e;
    if (x > kMaxExponent) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "expm_hermitian: exponent %.6g overflows", x);
      throw OverflowError(buf);
    }
    return std::exp(x);
  });
}

template Matrix<2> expm_hermitian<2>(const Matrix<2>&, double);
template Matrix<4> expm_hermitian<4>(const Matrix<4>&, double);

DensityMatrix::DensityMatrix(const Matrix4& m, const Tolerances& tol) {
  if (!m.all_finite()) throw StateError("density matrix has non-finite entries");
  const double defect = m.hermiticity_defect();
  if (defect > tol.hermitian) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "density matrix is not Hermitian (defect %.3e)", defect);
    throw StateError(buf);
  }
  m_ = m.hermitian_part();
  const double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > tol.trace) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "density matrix trace %.15g differs from 1", trace);
    throw StateError(buf);
  }
  const double min_eig = herm_eig(m_)[0].value;
  if (min_eig < -tol.psd) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "density matrix has negative eigenvalue %.3e", min_eig);
    throw StateError(buf);
  }
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Matrix4::identity() * 0.25); }

DensityMatrix DensityMatrix::projector(const Vector<4>& psi) {
  const double n = norm(psi);
  if (!(n > 0.0)) throw StateError("projector: zero vector");
  return DensityMatrix(Matrix4::outer(psi, psi) * complex(1.0 / (n * n)));
}

DensityMatrix conjugate_map(const Matrix4& a, const DensityMatrix& rho, Renormalize renormalize) {
  Matrix4 out = a * rho.matrix() * a.adjoint();
  if (renormalize == Renormalize::yes) {
    const double tr = out.trace().real();
    if (!(tr > 1e-300)) throw StateAnnihilatedError("conjugate_map: map annihilated the state");
    out *= 1.0 / tr;
  }
  return DensityMatrix(out);
}

} // namespace gravcat
