#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "kframe/errors.hpp"

namespace kframe::num {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense complex matrix, row-major. Sized for desk-scale work (n <= 64);
/// every entry is validated to be finite on construction.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix diagonal(const std::vector<double>& values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Matrix adjoint() const;
  Matrix conjugate() const;
  Vector apply(const Vector& x) const;  // M x
  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;

  double frobenius_norm() const;
  double max_abs() const;
  double hermitian_residual() const;  // max |a_ij - conj(a_ji)|
  bool is_hermitian(double rtol = 1e-12) const;

  const std::vector<Complex>& entries() const noexcept { return entries_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(Complex s, const Matrix& a);

// Vector helpers. inner(x, y) is linear in x and conjugates y.
Complex inner(const Vector& x, const Vector& y);
double norm_sq(const Vector& x);
double norm(const Vector& x);
Vector add(const Vector& x, const Vector& y);
Vector sub(const Vector& x, const Vector& y);
Vector scale(Complex s, const Vector& x);
Matrix outer(const Vector& x, const Vector& y);  // x y*

/// Result of a Hermitian eigendecomposition: M = V diag(values) V*,
/// eigenvalues ascending, V unitary. Ties keep original column order.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

/// Cyclic Jacobi iteration on the symmetrized input. Converged when the
/// largest off-diagonal magnitude drops below 1e-13 times the Frobenius
/// norm; hard cap of 100 sweeps.
EigenDecomposition hermitian_eig(const Matrix& m);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues below
/// -1e-12 times the spectral radius are rejected; small negatives are
/// clamped to zero.
Matrix sqrt_psd(const Matrix& m);

/// M = V P with V unitary and P Hermitian positive definite. Requires
/// sigma_min > 1e-12 * sigma_max.
std::pair<Matrix, Matrix> polar_decompose(const Matrix& m);

/// For Hermitian P with ||P|| <= 1, the unitary W = P + i sqrt(I - P^2),
/// so that (W + W*)/2 = P.
Matrix unitary_from_contraction(const Matrix& p);

/// Moore-Penrose pseudo-inverse; singular values below 1e-12 of the
/// largest are treated as zero.
Matrix pseudo_inverse(const Matrix& m);

/// Number of singular values above tol * sigma_max. Zero matrix has rank 0.
std::size_t numerical_rank(const Matrix& m, double tol = 1e-9);

double spectral_norm(const Matrix& m);

/// Singular values, descending.
std::vector<double> singular_values(const Matrix& m);

}  // namespace kframe::num
