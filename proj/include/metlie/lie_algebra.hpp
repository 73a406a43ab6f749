#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "metlie/matrix.hpp"
#include "metlie/subspace.hpp"

namespace metlie {

/// One structure constant: [e_i, e_j] has coefficient c on e_k, with i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Rational c;
  friend bool operator==(const BracketEntry&, const BracketEntry&) = default;
};

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis. Construction rejects entries with i >= j, out-of-range
/// indices, duplicates, and any violation of the Jacobi identity.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry>& brackets);

  static LieAlgebra abelian(std::size_t dim);
  static LieAlgebra abelian(std::vector<std::string> basis_names);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  /// Nonzero structure constants with i < j, sorted by (i, j, k).
  std::vector<BracketEntry> brackets() const;

  /// Coefficient of e_k in [e_i, e_j] (any i, j).
  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim() + j) * dim() + k];
  }

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector bracket_basis(std::size_t i, std::size_t j) const;

  /// Matrix of y -> [x, y].
  Matrix ad(const Vector& x) const;
  Matrix ad_basis(std::size_t i) const;

  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Rational> table_;  // dim^3, antisymmetric in the first two slots
};

/// Checks [[e_i, e_j], e_k] + cyclic == 0 on every basis triple.
bool jacobi_holds(const LieAlgebra& g);

}  // namespace metlie
