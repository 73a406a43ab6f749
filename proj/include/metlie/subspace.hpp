#pragma once

#include <cstddef>
#include <vector>

#include "metlie/matrix.hpp"

namespace metlie {

/// Subspace of Q^n in canonical form: the basis columns are the nonzero rows
/// of the rref of any spanning set, so equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  /// Span of the columns of m.
  static Subspace span(const Matrix& columns);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// ambient_dim x dim, columns canonical.
  const Matrix& basis() const { return basis_; }
  Vector vector(std::size_t i) const { return basis_.column(i); }
  std::vector<Vector> vectors() const;
  /// Coordinate where each basis vector has its leading 1.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates that are not pivots; their unit vectors span a complement.
  std::vector<std::size_t> complement_coordinates() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in the canonical basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  /// v minus its component along the subspace, using the coordinate
  /// complement: the result vanishes on every pivot coordinate.
  Vector reduce(const Vector& v) const;

  /// Matrix (complement dim x ambient) sending v to the complement
  /// coordinates of reduce(v); its kernel is exactly this subspace.
  Matrix complement_projection() const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Image of the subspace under a linear map (map.cols() == ambient).
  Subspace image_under(const Matrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Column space of m.
Subspace image(const Matrix& m);
/// Null space of m.
Subspace null_space(const Matrix& m);

}  // namespace metlie
