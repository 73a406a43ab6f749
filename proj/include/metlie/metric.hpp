#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "metlie/lie_algebra.hpp"
#include "metlie/linalg.hpp"
#include "metlie/subspace.hpp"

namespace metlie {

/// Symmetric bilinear form given by its Gram matrix.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws Error(NonSymmetric) / Error(NonSquare).
  explicit BilinearForm(Matrix gram);

  static BilinearForm identity(std::size_t n) { return BilinearForm(Matrix::identity(n)); }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(const Vector& x, const Vector& y) const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

/// Lie algebra together with a (possibly degenerate) symmetric form.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  /// Throws Error(DimensionMismatch) if the sizes disagree.
  MetricLieAlgebra(LieAlgebra algebra, BilinearForm form);

  std::size_t dim() const { return algebra_.dim(); }
  const LieAlgebra& algebra() const { return algebra_; }
  const BilinearForm& form() const { return form_; }
  const Matrix& gram() const { return form_.gram(); }

  friend bool operator==(const MetricLieAlgebra&, const MetricLieAlgebra&) = default;

 private:
  LieAlgebra algebra_;
  BilinearForm form_;
};

Subspace metric_radical(const MetricLieAlgebra& m);
bool is_nondegenerate(const MetricLieAlgebra& m);

/// {x : <x, s> = 0}.
Subspace orthogonal_complement(const MetricLieAlgebra& m, const Subspace& s);
bool is_totally_isotropic(const MetricLieAlgebra& m, const Subspace& s);
/// Restriction of the form to s is nondegenerate.
bool is_nondegenerate_on(const MetricLieAlgebra& m, const Subspace& s);

Signature signature(const MetricLieAlgebra& m);
/// min(plus, minus): the dimension of a maximal totally isotropic subspace of
/// the nondegenerate part over the reals.
std::size_t witt_index(const MetricLieAlgebra& m);

struct WittDecomposition {
  Subspace a;
  Subspace w;
  /// Basis of a dual to u.basis(): <a_i, u_k> = delta_ik, <a_i, a_j> = 0.
  Matrix a_basis;
};

/// g = a + w + u for a totally isotropic u in a nondegenerate space.
/// Throws Error(DegenerateForm), Error(NotIsotropic).
WittDecomposition witt_decomposition(const MetricLieAlgebra& m, const Subspace& u);

/// z(n) cap [g, n] for the nilradical n. Throws Error(NonSolvable).
Subspace j0(const MetricLieAlgebra& m);

/// Largest ideal of g inside the metric radical; zero iff m is reduced.
Subspace reduced_core(const MetricLieAlgebra& m);
bool is_reduced(const MetricLieAlgebra& m);

/// {x : <[x,y],z> + <y,[x,z]> = 0 for all y, z}, linear in x.
Subspace invariance_defect(const MetricLieAlgebra& m);
bool is_invariant(const MetricLieAlgebra& m);

/// Lexicographically first basis triple (x, y, z) where invariance fails.
struct InvarianceWitness {
  std::size_t x = 0, y = 0, z = 0;
  Rational lhs;  // <[x,y],z>
  Rational rhs;  // -<y,[x,z]>
};
std::optional<InvarianceWitness> invariance_witness(const MetricLieAlgebra& m);

/// <a v, w> + <v, a w> == 0 for all v, w.
bool is_skew(const Matrix& a, const Matrix& gram);

struct NilInvarianceReport {
  bool certified = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t vectors_tested = 0;
  std::optional<Vector> counterexample;
};

/// Tests skewness of ad(x)_n for every basis vector, every pairwise sum of
/// basis vectors, and `samples` seeded random integer vectors. A returned
/// counterexample is a proof of failure; a certificate is only as strong as
/// the sample.
NilInvarianceReport nil_invariance_check(const MetricLieAlgebra& m, std::size_t samples = 64,
                                         std::uint64_t seed = 0);

/// Direct sum of metric Lie algebras with the block-diagonal form.
MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b);

}  // namespace metlie
