#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "metlie/matrix.hpp"
#include "metlie/polynomial.hpp"

namespace metlie {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by fraction-free Gauss-Jordan elimination.
///
/// Each row is scaled to integers first; elimination then stays in Z using
/// the Bareiss update (p * a_ij - a_ik * a_pj) / prev_pivot, whose division is
/// exact. Among the candidate rows the pivot with the smallest bit length is
/// taken (ties: lowest row index). Rows are normalised only at the end.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {v : m v = 0}; one column per free variable of
/// the rref, with a 1 in that variable's slot.
Matrix kernel(const Matrix& m);

/// One solution of m x = b with the free variables set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Matrix inverse(const Matrix& m);

/// Monic least-degree annihilating polynomial, from the first linear
/// dependency among vec(I), vec(m), vec(m^2), ...
Polynomial minimal_polynomial(const Matrix& m);

/// det(x I - m) via Hessenberg reduction.
Polynomial characteristic_polynomial(const Matrix& m);

/// Additive Jordan-Chevalley decomposition with its witnessing polynomials.
struct JordanPair {
  Matrix semisimple;
  Matrix nilpotent;
  Polynomial p_poly;  // p_poly(m) == semisimple, zero constant term
  Polynomial q_poly;  // q_poly(m) == nilpotent, zero constant term
};

/// Newton iteration s <- s - f(s)/f'(s) in Q[x]/(chi) where chi is the
/// characteristic polynomial and f its squarefree part, started at s = x.
/// The fixed point P satisfies P(m) = m_ss. If 0 is not an eigenvalue the
/// constant term is removed by subtracting P(0)/chi(0) * chi.
JordanPair jordan_chevalley(const Matrix& m);

struct CongruenceDiagonalization {
  Matrix basis_change;    // S
  std::vector<Rational> diagonal;  // S^T g S = diag(d)
};

/// Symmetric Gaussian elimination. Throws Error(NonSymmetric).
CongruenceDiagonalization congruence_diagonalize(const Matrix& g);

struct Signature {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t null = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature_of(const Matrix& symmetric);

}  // namespace metlie
