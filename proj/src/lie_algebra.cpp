#include "metlie/lie_algebra.hpp"

#include <set>
#include <tuple>

#include "metlie/error.hpp"

namespace metlie {

namespace {

std::string default_name(std::size_t i) { return "e" + std::to_string(i + 1); }

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry>& brackets)
    : names_(std::move(basis_names)) {
  const std::size_t n = names_.size();
  table_.assign(n * n * n, Rational(0));
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n || b.k >= n)
      throw Error(ErrorCode::InvalidBracket, "bracket index out of range");
    if (b.i >= b.j)
      throw Error(ErrorCode::InvalidBracket,
                  "bracket entries must have i < j (got i=" + std::to_string(b.i) + ", j=" + std::to_string(b.j) + ")");
    if (!seen.emplace(b.i, b.j, b.k).second)
      throw Error(ErrorCode::InvalidBracket, "duplicate bracket entry");
    table_[(b.i * n + b.j) * n + b.k] = b.c;
    table_[(b.j * n + b.i) * n + b.k] = -b.c;
  }
  if (!jacobi_holds(*this)) throw Error(ErrorCode::JacobiViolation, "structure constants violate the Jacobi identity");
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(default_name(i));
  return LieAlgebra(std::move(names), {});
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> basis_names) { return LieAlgebra(std::move(basis_names), {}); }

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const auto& c = structure_constant(i, j, k); c != 0) out.push_back({i, j, k, c});
  return out;
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  return Vector(table_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                table_.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "bracket: vector length");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (const auto& c = structure_constant(i, j, k); c != 0) out[k] += xy * c;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, "ad: vector length");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (const auto& c = structure_constant(i, j, k); c != 0) m(k, j) += x[i] * c;
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

bool LieAlgebra::is_abelian() const {
  for (const auto& c : table_)
    if (c != 0) return false;
  return true;
}

bool jacobi_holds(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector a = g.bracket(g.bracket_basis(i, j), unit_vector(n, k));
        const Vector b = g.bracket(g.bracket_basis(j, k), unit_vector(n, i));
        const Vector c = g.bracket(g.bracket_basis(k, i), unit_vector(n, j));
        if (!is_zero(a + b + c)) return false;
      }
  return true;
}

}  // namespace metlie
