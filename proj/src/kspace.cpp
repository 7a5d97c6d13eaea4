#include "kframe/kspace.hpp"

#include <algorithm>
#include <cmath>

namespace kframe {

using num::EigenDecomposition;
using num::Vector;

void KreinSpace::check_dim(const KVector& x) const {
  if (x.size() != dim()) {
    raise(Errc::DimensionMismatch, "vector length does not match space dimension");
  }
}

Matrix KreinSpace::fundamental_symmetry() const {
  Matrix j(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) j(i, i) = i < p_ ? 1.0 : -1.0;
  return j;
}

Complex KreinSpace::inner(const KVector& x, const KVector& y) const {
  check_dim(x);
  check_dim(y);
  Complex acc(0.0);
  for (std::size_t i = 0; i < p_; ++i) acc += x[i] * std::conj(y[i]);
  for (std::size_t i = p_; i < dim(); ++i) acc -= x[i] * std::conj(y[i]);
  return acc;
}

double KreinSpace::j_norm_sq(const KVector& x) const {
  check_dim(x);
  return num::norm_sq(x);
}

KVector KreinSpace::project_plus(const KVector& x) const {
  check_dim(x);
  KVector y(dim(), Complex(0.0));
  for (std::size_t i = 0; i < p_; ++i) y[i] = x[i];
  return y;
}

KVector KreinSpace::project_minus(const KVector& x) const {
  check_dim(x);
  KVector y(dim(), Complex(0.0));
  for (std::size_t i = p_; i < dim(); ++i) y[i] = x[i];
  return y;
}

KVector KreinSpace::plus_part(const KVector& x) const {
  check_dim(x);
  return KVector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p_));
}

KVector KreinSpace::minus_part(const KVector& x) const {
  check_dim(x);
  return KVector(x.begin() + static_cast<std::ptrdiff_t>(p_), x.end());
}

KVector KreinSpace::embed(const KVector& plus, const KVector& minus) const {
  if (plus.size() != p_ || minus.size() != q_) {
    raise(Errc::DimensionMismatch, "component lengths do not match signature");
  }
  KVector y;
  y.reserve(dim());
  y.insert(y.end(), plus.begin(), plus.end());
  y.insert(y.end(), minus.begin(), minus.end());
  return y;
}

SymmetryReport validate_symmetry(const KreinSpace& space, const Matrix& jmat) {
  const std::size_t n = space.dim();
  if (jmat.rows() != n || jmat.cols() != n) {
    raise(Errc::DimensionMismatch, "symmetry matrix must be n x n");
  }
  SymmetryReport report;

  const Matrix eta = space.fundamental_symmetry();
  report.involution_residual = (jmat * jmat - Matrix::identity(n)).max_abs();
  report.involutive = report.involution_residual <= 1e-10;

  // [Jx,y] = [x,Jy] for all x,y is equivalent to eta*J being Hermitian.
  const Matrix gram = eta * jmat;
  report.self_adjoint_residual = gram.hermitian_residual();
  report.self_adjoint = report.self_adjoint_residual <= 1e-10;

  if (report.self_adjoint && n > 0) {
    Matrix sym(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        sym(i, j) = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
    EigenDecomposition ed = num::hermitian_eig(sym);
    report.min_gram_eigenvalue = ed.eigenvalues.front();
    report.positive = report.min_gram_eigenvalue > 1e-10;
  } else if (n == 0) {
    report.positive = true;
  }
  return report;
}

namespace {

// Euclidean-orthonormal basis of the range of a (numerically) idempotent
// matrix, from the eigenvectors of proj*proj^H with eigenvalue near one.
std::vector<Vector> range_basis(const Matrix& proj) {
  EigenDecomposition ed = num::hermitian_eig(proj * proj.adjoint());
  std::vector<Vector> basis;
  for (std::size_t l = 0; l < ed.eigenvalues.size(); ++l) {
    if (ed.eigenvalues[l] > 0.5) basis.push_back(ed.eigenvectors.col(l));
  }
  return basis;
}

}  // namespace

AdaptedBasis decomposition_from_symmetry(const KreinSpace& space,
                                         const Matrix& jmat) {
  const SymmetryReport report = validate_symmetry(space, jmat);
  if (!report.valid()) {
    raise(Errc::InvalidSymmetry, "matrix is not a fundamental symmetry");
  }
  const std::size_t n = space.dim();
  const Matrix ident = Matrix::identity(n);

  AdaptedBasis out;
  for (int sign : {+1, -1}) {
    Matrix proj(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        proj(i, j) = 0.5 * (ident(i, j) + double(sign) * jmat(i, j));

    // Gram-Schmidt inside the eigenspace, in the sign-definite product
    // sign*[.,.].
    std::vector<KVector> ortho;
    for (const Vector& cand : range_basis(proj)) {
      KVector v = cand;
      for (const KVector& b : ortho) {
        const Complex coeff = double(sign) * space.inner(v, b);
        v = num::sub(v, num::scale(coeff, b));
      }
      const double nsq = (double(sign) * space.inner(v, v)).real();
      if (nsq <= 1e-12) {
        raise(Errc::InvalidSymmetry, "degenerate eigenspace metric");
      }
      v = num::scale(1.0 / std::sqrt(nsq), v);
      ortho.push_back(std::move(v));
    }

    const std::size_t expected = sign > 0 ? space.p() : space.q();
    if (ortho.size() != expected) {
      raise(Errc::InvalidSymmetry, "eigenspace dimension does not match signature");
    }
    for (KVector& b : ortho) {
      out.basis.push_back(std::move(b));
      out.signs.push_back(sign);
    }
  }
  return out;
}

}  // namespace kframe
