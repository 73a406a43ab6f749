#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "metlie/metric.hpp"

namespace metlie {

enum class Family { Abelian, Heisenberg, Oscillator, R2, DoubleExtensionChain, RandomSolvable };

std::string to_string(Family f);
/// Throws Error(InvalidParams) for unknown names.
Family parse_family(const std::string& name);

/// Family plus its parameters as written on the command line.
///
///   abelian                 n [negatives]      identity Gram, last `negatives` entries -1
///   heisenberg              [k]                h_{2k+1}, identity Gram (not invariant)
///   oscillator              f1 [f2 ...]        positive rational frequencies
///   r2                      -                  [A, X] = X, identity Gram (not invariant)
///   double_extension_chain  depth [base_dim]   base R^base_dim (default 2)
///   random_solvable         depth              base dimension and Gram drawn from the seed
struct FamilySpec {
  Family family = Family::Abelian;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
};

/// Throws Error(InvalidParams).
MetricLieAlgebra generate(const FamilySpec& spec);

/// Basis of the symmetric S with S ad(e_i) + ad(e_i)^T S = 0 for all i.
std::vector<Matrix> solve_invariant_forms(const LieAlgebra& g);

/// Adds a random symmetric perturbation to the Gram matrix until the form
/// stops being invariant (used for negative instances). Throws
/// Error(InvalidParams) if every attempt stays invariant.
MetricLieAlgebra perturb_form(const MetricLieAlgebra& m, std::uint64_t seed);

}  // namespace metlie
