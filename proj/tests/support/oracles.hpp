#pragma once

// Slow, independent reference implementations used to cross-check the
// library. Nothing here shares code paths with the routines under test
// beyond the rational type and basic polynomial arithmetic.

#include <cstdint>
#include <utility>
#include <vector>

#include "metlie/lie_algebra.hpp"
#include "metlie/matrix.hpp"
#include "metlie/polynomial.hpp"
#include "metlie/random.hpp"
#include "metlie/skew_pairing.hpp"

namespace oracle {

using metlie::Matrix;
using metlie::Polynomial;
using metlie::Rational;
using metlie::Vector;

/// Textbook Gauss-Jordan on rationals, first nonzero pivot in each column.
Matrix naive_rref(const Matrix& m);
std::size_t naive_rank(const Matrix& m);
Rational naive_det(const Matrix& m);
/// Inverse by Gauss-Jordan on [m | I]; m must be invertible.
Matrix naive_inverse(const Matrix& m);

/// det(tI - A) interpolated from its values at t = 0..n.
Polynomial charpoly_by_interpolation(const Matrix& a);

/// Jordan parts by matrix Newton iteration S <- S - f(S) f'(S)^{-1} with f
/// the squarefree part of the interpolated characteristic polynomial.
std::pair<Matrix, Matrix> jordan_by_matrix_newton(const Matrix& a);

bool is_nilpotent(const Matrix& a);

/// Random n x n integer matrix with repeated eigenvalues and nontrivial
/// Jordan blocks: a block upper-triangular core conjugated by a random
/// unimodular matrix.
Matrix random_structured_matrix(metlie::SampleRng& rng, std::size_t n);

/// Random module over an abelian algebra with a skew pairing: the action
/// matrices are polynomials in one random matrix and the pairing is a random
/// point of the linear solution space.
metlie::SkewPairingModule random_skew_pairing(metlie::SampleRng& rng);

/// Coordinates x with entries in [-2, 2] and at most `max_support` nonzero
/// entries (the whole grid when max_support >= dim) for which ad(x) is
/// nilpotent, tested by powering the integer-scaled adjoint matrix.
std::vector<Vector> nilpotent_grid_points(const metlie::LieAlgebra& g, std::size_t max_support);

}  // namespace oracle
