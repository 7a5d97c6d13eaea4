#pragma once

#include <cstddef>
#include <vector>

#include "kframe/numeric.hpp"

namespace kframe {

using num::Complex;
using num::Matrix;

/// Coordinate vector in a fixed J-orthonormal basis of the owning space.
using KVector = num::Vector;

/// Finite-dimensional Krein space in canonical coordinates: the first p
/// coordinates span the positive part K+, the last q span K-, and the
/// fundamental symmetry is J = diag(+1 x p, -1 x q). The indefinite inner
/// product is [x,y] = sum_{i<p} x_i conj(y_i) - sum_{i>=p} x_i conj(y_i).
///
/// n = 0 is tolerated internally (it shows up as the trivial complement of
/// a full projection split); document loading rejects it.
class KreinSpace {
public:
  KreinSpace(std::size_t p, std::size_t q) : p_(p), q_(q) {}

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  std::size_t dim() const noexcept { return p_ + q_; }

  Matrix fundamental_symmetry() const;

  Complex inner(const KVector& x, const KVector& y) const;
  double j_norm_sq(const KVector& x) const;

  /// Keep the K+ (resp. K-) coordinates, zero the rest; output has full
  /// dimension n.
  KVector project_plus(const KVector& x) const;
  KVector project_minus(const KVector& x) const;

  /// Component extraction in component coordinates (length p resp. q).
  KVector plus_part(const KVector& x) const;
  KVector minus_part(const KVector& x) const;
  KVector embed(const KVector& plus, const KVector& minus) const;

  void check_dim(const KVector& x) const;

  bool operator==(const KreinSpace& other) const noexcept {
    return p_ == other.p_ && q_ == other.q_;
  }

private:
  std::size_t p_;
  std::size_t q_;
};

/// Checks of a candidate fundamental symmetry against the space's product:
/// J^2 = I, [Jx,y] = [x,Jy], and positivity of [J.,.].
struct SymmetryReport {
  bool involutive = false;
  bool self_adjoint = false;
  bool positive = false;
  double involution_residual = 0.0;
  double self_adjoint_residual = 0.0;
  double min_gram_eigenvalue = 0.0;

  bool valid() const noexcept { return involutive && self_adjoint && positive; }
};

SymmetryReport validate_symmetry(const KreinSpace& space, const Matrix& jmat);

/// J-orthonormal basis adapted to a validated symmetry: jmat b_i = signs[i] b_i
/// and Gram([b_i,b_j]) = diag(+1 x p, -1 x q), positive vectors first.
struct AdaptedBasis {
  std::vector<KVector> basis;
  std::vector<int> signs;
};

AdaptedBasis decomposition_from_symmetry(const KreinSpace& space,
                                         const Matrix& jmat);

}  // namespace kframe
