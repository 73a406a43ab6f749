#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "metlie/matrix.hpp"
#include "metlie/subspace.hpp"

namespace metlie {

/// Module V over an abelian Lie algebra a (generators A_1..A_k acting by the
/// commuting matrices rho[i]) together with a bilinear pairing V x a -> Q,
/// stored as pairing(v, B) for basis vectors v of V and B of a.
struct SkewPairingModule {
  std::size_t abelian_dim = 0;
  std::size_t module_dim = 0;
  std::vector<Matrix> rho;
  Matrix pairing;  // module_dim x abelian_dim

  /// rho(x) = sum x_i rho[i].
  Matrix action(const Vector& x) const;
};

/// Throws Error(InvalidPairing) on shape errors, non-commuting generators,
/// or failure of <rho(A)v, B> = -<rho(B)v, A> on basis elements.
void validate(const SkewPairingModule& sp);

/// {v : <v, a> = 0}.
Subspace pairing_radical(const SkewPairingModule& sp);

struct SkewPairingAnalysis {
  enum class Kind { Nilpotent, SubmoduleInRadical };
  Kind kind = Kind::Nilpotent;
  /// Element A of a with W = rho(A)^2 V != 0, when found.
  std::optional<Vector> element;
  Subspace witness;
  bool witness_in_radical = false;
  bool witness_is_submodule = false;
  std::size_t elements_tested = 0;
};

/// Either every rho(A) is nilpotent, or some W = rho(A)^2 V is a nonzero
/// submodule inside the pairing radical.
///
/// x -> rho(x)^2 is a quadratic form with values in commuting matrices, so it
/// vanishes identically iff it vanishes on the generators and their pairwise
/// sums; those are tested first, then `samples` seeded random elements.
SkewPairingAnalysis analyze_skew_pairing(const SkewPairingModule& sp, std::size_t samples = 64,
                                         std::uint64_t seed = 0);

}  // namespace metlie
