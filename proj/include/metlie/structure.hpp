#pragma once

#include <vector>

#include "metlie/lie_algebra.hpp"
#include "metlie/subspace.hpp"

namespace metlie {

/// g = D^0, D^{k+1} = [D^k, D^k]; stops at the first repeated term, which is
/// not repeated in the output.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// g = C^0, C^{k+1} = [g, C^k]; same stopping rule.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

/// span{[u_i, v_j]}.
Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& u, const Subspace& v);

Subspace center(const LieAlgebra& g);

/// {x : [x, s] = 0}.
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

bool is_ideal(const LieAlgebra& g, const Subspace& s);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Smallest ideal containing s.
Subspace ideal_generated_by(const LieAlgebra& g, const Subspace& s);

/// Largest nilpotent ideal of a solvable algebra.
///
/// The associative algebra A generated by ad(e_1), ..., ad(e_n) is built by
/// closing the generators under left multiplication. In characteristic zero
/// its radical is {a in A : tr(ab) = 0 for all b in A}, and for solvable g an
/// element x has ad(x) in that radical exactly when ad(x) is nilpotent. Since
/// ad(x) already lies in A, the nilradical is the kernel of
/// x -> (tr(ad(x) b_1), ..., tr(ad(x) b_m)) over a basis b of A.
///
/// Throws Error(NonSolvable).
Subspace nilradical(const LieAlgebra& g);

/// Center of the subalgebra s, as a subspace of g.
Subspace center_of(const LieAlgebra& g, const Subspace& s);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;                     // dim(g / ideal) x dim(g)
  std::vector<std::size_t> representatives;  // coordinates of g spanning the complement
};

/// g / ideal, realised on the complement spanned by the non-pivot coordinates
/// of the ideal's canonical basis. Throws Error(NotAnIdeal).
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

/// Largest subspace of `within` mapped into `within` by every ad(e_i):
/// iterates I <- {x in I : [g, x] in I} to a fixed point.
Subspace largest_ideal_inside(const LieAlgebra& g, const Subspace& within);

/// Restriction of g to a subalgebra, in the subalgebra's canonical basis.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& subalgebra);

/// Direct sum with the second summand's basis appended after the first.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace metlie
