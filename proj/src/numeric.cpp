#include "kframe/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kframe::num {

namespace {

void check_finite(const std::vector<Complex>& entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      raise(Errc::InvalidArgument, "matrix entry is not finite");
    }
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    raise(Errc::DimensionMismatch, "entry count does not match rows*cols");
  }
  check_finite(entries_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) {
      raise(Errc::DimensionMismatch, "ragged row list");
    }
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  check_finite(m.entries_);
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Matrix Matrix::conjugate() const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
  return m;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) {
    raise(Errc::DimensionMismatch, "vector length does not match column count");
  }
  Vector y(rows_, Complex(0.0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc(0.0);
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

double Matrix::frobenius_norm() const {
  double acc = 0.0;
  for (const Complex& z : entries_) acc += std::norm(z);
  return std::sqrt(acc);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double Matrix::hermitian_residual() const {
  double r = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r = std::max(r, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return r;
}

bool Matrix::is_hermitian(double rtol) const {
  if (rows_ != cols_) return false;
  const double scale = frobenius_norm();
  return hermitian_residual() <= rtol * std::max(scale, 1e-300);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(Errc::DimensionMismatch, "matrix addition shape mismatch");
  }
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) + b(i, j);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(Errc::DimensionMismatch, "matrix subtraction shape mismatch");
  }
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) - b(i, j);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    raise(Errc::DimensionMismatch, "matrix product shape mismatch");
  }
  Matrix m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Complex ail = a(i, l);
      if (ail == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) += ail * b(l, j);
    }
  }
  return m;
}

Matrix operator*(Complex s, const Matrix& a) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = s * a(i, j);
  return m;
}

Complex inner(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    raise(Errc::DimensionMismatch, "inner product length mismatch");
  }
  Complex acc(0.0);
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
  return acc;
}

double norm_sq(const Vector& x) {
  double acc = 0.0;
  for (const Complex& z : x) acc += std::norm(z);
  return acc;
}

double norm(const Vector& x) { return std::sqrt(norm_sq(x)); }

Vector add(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) raise(Errc::DimensionMismatch, "vector add");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
  return z;
}

Vector sub(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) raise(Errc::DimensionMismatch, "vector sub");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
  return z;
}

Vector scale(Complex s, const Vector& x) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = s * x[i];
  return z;
}

Matrix outer(const Vector& x, const Vector& y) {
  Matrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

namespace {

constexpr double kOffDiagTol = 1e-13;
constexpr int kMaxSweeps = 100;

double max_off_diagonal(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

// One complex Jacobi rotation zeroing A(p,q). R differs from identity at
// R(p,p)=c, R(p,q)=s, R(q,p)=-conj(phi)*s, R(q,q)=conj(phi)*c, where
// A(p,q) = |A(p,q)| * phi. Applies A <- R* A R and V <- V R.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double absb = std::abs(apq);
  if (absb == 0.0) return;
  const Complex phi = apq / absb;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * absb);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex rpp = c;
  const Complex rpq = s;
  const Complex rqp = -std::conj(phi) * s;
  const Complex rqq = std::conj(phi) * c;

  const std::size_t n = a.rows();
  // A <- A R (columns p and q).
  for (std::size_t r = 0; r < n; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = arp * rpp + arq * rqp;
    a(r, q) = arp * rpq + arq * rqq;
  }
  // A <- R* A (rows p and q).
  for (std::size_t cidx = 0; cidx < n; ++cidx) {
    const Complex apr = a(p, cidx);
    const Complex aqr = a(q, cidx);
    a(p, cidx) = std::conj(rpp) * apr + std::conj(rqp) * aqr;
    a(q, cidx) = std::conj(rpq) * apr + std::conj(rqq) * aqr;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t r = 0; r < n; ++r) {
    const Complex vrp = v(r, p);
    const Complex vrq = v(r, q);
    v(r, p) = vrp * rpp + vrq * rqp;
    v(r, q) = vrp * rpq + vrq * rqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const Matrix& m) {
  if (m.rows() != m.cols()) {
    raise(Errc::NotSquare, "eigendecomposition requires a square matrix");
  }
  if (!m.is_hermitian(1e-12)) {
    raise(Errc::NotHermitian, "matrix is not Hermitian within 1e-12");
  }

  const std::size_t n = m.rows();
  EigenDecomposition out;
  out.eigenvectors = Matrix::identity(n);
  if (n == 0) return out;

  // Work on the exactly-Hermitian average of M and M*.
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  const double scale = a.frobenius_norm();
  Matrix& v = out.eigenvectors;
  if (scale > 0.0) {
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      if (max_off_diagonal(a) < kOffDiagTol * scale) break;
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  out.eigenvalues.resize(n);
  Matrix sorted(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) sorted(i, j) = v(i, order[j]);
  }
  out.eigenvectors = std::move(sorted);
  return out;
}

namespace {

Matrix assemble(const EigenDecomposition& ed, const std::vector<double>& d) {
  const std::size_t n = d.size();
  const Matrix& v = ed.eigenvectors;
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc(0.0);
      for (std::size_t l = 0; l < n; ++l)
        acc += v(i, l) * d[l] * std::conj(v(j, l));
      m(i, j) = acc;
      m(j, i) = std::conj(acc);
    }
    m(i, i) = m(i, i).real();
  }
  return m;
}

}  // namespace

Matrix sqrt_psd(const Matrix& m) {
  EigenDecomposition ed = hermitian_eig(m);
  double radius = 0.0;
  for (double lam : ed.eigenvalues) radius = std::max(radius, std::abs(lam));
  std::vector<double> roots(ed.eigenvalues.size());
  for (std::size_t i = 0; i < ed.eigenvalues.size(); ++i) {
    double lam = ed.eigenvalues[i];
    if (lam < -1e-12 * radius) {
      raise(Errc::NotPSD, "eigenvalue below PSD threshold");
    }
    roots[i] = std::sqrt(std::max(lam, 0.0));
  }
  return assemble(ed, roots);
}

std::pair<Matrix, Matrix> polar_decompose(const Matrix& m) {
  if (m.rows() != m.cols()) {
    raise(Errc::NotSquare, "polar decomposition requires a square matrix");
  }
  const std::size_t n = m.rows();
  EigenDecomposition ed = hermitian_eig(m.adjoint() * m);
  std::vector<double> sigma(n), inv_sigma(n);
  double smax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sigma[i] = std::sqrt(std::max(ed.eigenvalues[i], 0.0));
    smax = std::max(smax, sigma[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] <= 1e-12 * smax || smax == 0.0) {
      raise(Errc::Singular, "matrix is singular to working precision");
    }
    inv_sigma[i] = 1.0 / sigma[i];
  }
  Matrix p = assemble(ed, sigma);
  Matrix v = m * assemble(ed, inv_sigma);
  return {std::move(v), std::move(p)};
}

Matrix unitary_from_contraction(const Matrix& p) {
  EigenDecomposition ed = hermitian_eig(p);
  const std::size_t n = p.rows();
  for (double lam : ed.eigenvalues) {
    if (std::abs(lam) > 1.0 + 1e-12) {
      raise(Errc::NormExceedsOne, "contraction has spectral norm above one");
    }
  }
  const Matrix& v = ed.eigenvectors;
  Matrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0);
      for (std::size_t l = 0; l < n; ++l) {
        const double lam = std::clamp(ed.eigenvalues[l], -1.0, 1.0);
        const Complex wl(lam, std::sqrt(1.0 - lam * lam));
        acc += v(i, l) * wl * std::conj(v(j, l));
      }
      w(i, j) = acc;
    }
  }
  return w;
}

Matrix pseudo_inverse(const Matrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  if (r == 0 || c == 0) return Matrix(c, r);

  EigenDecomposition ed = hermitian_eig(m.adjoint() * m);
  double lmax = 0.0;
  for (double lam : ed.eigenvalues) lmax = std::max(lmax, lam);
  if (lmax <= 0.0) return Matrix(c, r);

  // pinv = (sum 1/lambda_l v_l v_l*) M*, keeping sigma > 1e-12 sigma_max.
  const double cut = 1e-24 * lmax;
  std::vector<double> inv(ed.eigenvalues.size(), 0.0);
  for (std::size_t l = 0; l < ed.eigenvalues.size(); ++l)
    if (ed.eigenvalues[l] > cut) inv[l] = 1.0 / ed.eigenvalues[l];
  return assemble(ed, inv) * m.adjoint();
}

std::vector<double> singular_values(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  const Matrix gram =
      m.rows() <= m.cols() ? m * m.adjoint() : m.adjoint() * m;
  EigenDecomposition ed = hermitian_eig(gram);
  std::vector<double> out(ed.eigenvalues.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::sqrt(std::max(ed.eigenvalues[ed.eigenvalues.size() - 1 - i], 0.0));
  }
  return out;
}

std::size_t numerical_rank(const Matrix& m, double tol) {
  if (tol <= 0.0) raise(Errc::InvalidArgument, "rank tolerance must be positive");
  const std::vector<double> sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  std::size_t rank = 0;
  for (double s : sv)
    if (s > tol * sv.front()) ++rank;
  return rank;
}

double spectral_norm(const Matrix& m) {
  const std::vector<double> sv = singular_values(m);
  return sv.empty() ? 0.0 : sv.front();
}

}  // namespace kframe::num
