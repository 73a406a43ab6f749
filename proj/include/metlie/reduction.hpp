#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metlie/metric.hpp"

namespace metlie {

/// One step of the reduction g -> j^perp / j.
///
/// For an isotropic central ideal j the input splits as g = a + w + j with a
/// dually paired to j and w = (a + j)^perp. The quotient is realised on w, and
/// for X, Y in j^perp and A in a
///   [X, Y] = [X, Y]_quotient + omega(X, Y),
///   [A, X] = abar_A X + xi_A(X).
/// A radical step (the optional first step of a chain) instead divides out
/// the metric radical; it carries no a, omega, abar or xi.
struct ReductionStep {
  enum class Kind { IsotropicCentral, RadicalQuotient };

  Kind kind = Kind::IsotropicCentral;
  MetricLieAlgebra input;
  Subspace j;
  Subspace a;
  Subspace w;
  Matrix a_basis;  // columns dual to j.basis()
  Matrix w_basis;  // columns realising the quotient basis inside g
  MetricLieAlgebra quotient;
  /// omega[p][q]: coordinates in j.basis() of omega(w_p, w_q).
  std::vector<std::vector<Vector>> omega;
  /// abar[t]: dim w x dim w, the derivation induced by a_basis column t.
  std::vector<Matrix> abar;
  /// xi[t]: dim j x dim w.
  std::vector<Matrix> xi;
};

struct ReductionChain {
  std::vector<ReductionStep> steps;
  MetricLieAlgebra terminal;
  bool terminal_abelian = false;
  bool terminal_positive_definite = false;
};

/// Which admissible candidate to take when several exist.
enum class LineChoice { First, Last };

/// A nonzero vector of `within` with <v, v> = 0, searching basis vectors,
/// then a*u + v for basis pairs and a in {-2..2}, then exact roots of the
/// quadratic on each 2-dimensional span (including pairs of a diagonalising
/// basis of the restricted form).
std::optional<Vector> find_isotropic_vector(const MetricLieAlgebra& m, const Subspace& within,
                                            LineChoice choice = LineChoice::First);

/// One-dimensional, totally isotropic, central ideal inside j0 cap z(g).
/// Throws Error(NonSolvable), Error(DegenerateForm), Error(NotNilInvariant),
/// Error(Abelian).
Subspace find_isotropic_central_line(const MetricLieAlgebra& m, LineChoice choice = LineChoice::First);

/// Throws Error(DegenerateForm), Error(NotCentral), Error(NotIsotropic), and
/// Error(NotAnIdeal) when j^perp fails to be an ideal.
ReductionStep reduce_once(const MetricLieAlgebra& m, const Subspace& j);

/// Quotient by the metric radical, which must be an ideal.
ReductionStep reduce_by_radical(const MetricLieAlgebra& m);

/// <abar_A X, Y> == <omega(X, Y), A> on all basis elements.
bool verify_cocycle_derivation_identity(const ReductionStep& step);
bool verify_xi_vanishes(const ReductionStep& step);
/// omega is antisymmetric and omega([x,y],z) + cyclic == 0.
bool verify_omega_cocycle(const ReductionStep& step);
/// Each abar is a derivation of the quotient.
bool verify_abar_derivations(const ReductionStep& step);
/// Rebuilding [w, w], [a, w], [a, j], [w, j], [j, j] from the step data gives
/// the input brackets.
bool verify_bracket_reconstruction(const ReductionStep& step);

/// Iterated reduction to an abelian algebra. A degenerate input is first
/// divided by its metric radical.
/// Throws Error(NonSolvable), Error(NotNilInvariant).
ReductionChain complete_reduction(const MetricLieAlgebra& m, LineChoice choice = LineChoice::First);

/// Basis of {d : d derivation of g, d skew for the form}.
std::vector<Matrix> skew_derivations(const MetricLieAlgebra& m);

/// Double extension of an invariant metric Lie algebra by a skew
/// derivation d. The result has basis (A, base..., Z) with
///   [A, x] = d x,  [x, y] = [x, y]_base + <d x, y> Z,  <A, Z> = 1,
/// and A, Z isotropic. Empty names pick the first unused of A, A1, A2, ...
/// (likewise Z). Throws Error(NotSkew), Error(NotDerivation),
/// Error(NotInvariant).
MetricLieAlgebra double_extension(const MetricLieAlgebra& base, const Matrix& d, std::string derivation_name = "",
                                  std::string central_name = "");

}  // namespace metlie
