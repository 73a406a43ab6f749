#include "metlie/subspace.hpp"

#include "metlie/error.hpp"
#include "metlie/linalg.hpp"

namespace metlie {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace Subspace::span(const Matrix& columns) {
  Subspace s(columns.rows());
  if (columns.cols() == 0) return s;
  auto [reduced, pivots] = rref(columns.transpose());
  Matrix basis(columns.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < columns.rows(); ++r) basis(r, k) = reduced(k, r);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return span(Matrix::from_columns(ambient_dim, vectors));
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

std::vector<Vector> Subspace::vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

std::vector<std::size_t> Subspace::complement_coordinates() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace: vector length");
  Vector r = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational c = r[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (basis_(i, k) != 0) r[i] -= c * basis_(i, k);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return metlie::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace: ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw Error(ErrorCode::DimensionMismatch, "subspace: vector not contained");
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Matrix Subspace::complement_projection() const {
  const auto comp = complement_coordinates();
  Matrix p(comp.size(), ambient_);
  for (std::size_t j = 0; j < ambient_; ++j) {
    const Vector r = reduce(unit_vector(ambient_, j));
    for (std::size_t t = 0; t < comp.size(); ++t) p(t, j) = r[comp[t]];
  }
  return p;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorCode::DimensionMismatch, "subspace sum: ambient dimensions differ");
  return span(Matrix::hcat(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(ErrorCode::DimensionMismatch, "subspace intersection: ambient dimensions differ");
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // x in both  <=>  x is annihilated by both complement projections.
  return null_space(Matrix::vcat(complement_projection(), other.complement_projection()));
}

Subspace Subspace::image_under(const Matrix& map) const {
  if (map.cols() != ambient_) throw Error(ErrorCode::DimensionMismatch, "image_under: map width");
  return span(map * basis_);
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

Subspace null_space(const Matrix& m) { return Subspace::span(kernel(m)); }

}  // namespace metlie
