#include "metlie/skew_pairing.hpp"

#include "metlie/error.hpp"
#include "metlie/random.hpp"

namespace metlie {

Matrix SkewPairingModule::action(const Vector& x) const {
  if (x.size() != abelian_dim) throw Error(ErrorCode::DimensionMismatch, "skew pairing: element length");
  Matrix out(module_dim, module_dim);
  for (std::size_t i = 0; i < abelian_dim; ++i)
    if (x[i] != 0) out += x[i] * rho[i];
  return out;
}

void validate(const SkewPairingModule& sp) {
  if (sp.rho.size() != sp.abelian_dim) throw Error(ErrorCode::InvalidPairing, "one action matrix per generator expected");
  for (const auto& r : sp.rho)
    if (r.rows() != sp.module_dim || r.cols() != sp.module_dim)
      throw Error(ErrorCode::InvalidPairing, "action matrix has the wrong shape");
  if (sp.pairing.rows() != sp.module_dim || sp.pairing.cols() != sp.abelian_dim)
    throw Error(ErrorCode::InvalidPairing, "pairing matrix has the wrong shape");
  for (std::size_t a = 0; a < sp.abelian_dim; ++a)
    for (std::size_t b = a + 1; b < sp.abelian_dim; ++b)
      if (!commutator(sp.rho[a], sp.rho[b]).is_zero())
        throw Error(ErrorCode::InvalidPairing, "action matrices do not commute");
  // (rho(A)^T P)(v, B) = <rho(A) v, B>
  std::vector<Matrix> moved;
  for (const auto& r : sp.rho) moved.push_back(r.transpose() * sp.pairing);
  for (std::size_t a = 0; a < sp.abelian_dim; ++a)
    for (std::size_t b = a; b < sp.abelian_dim; ++b)
      for (std::size_t v = 0; v < sp.module_dim; ++v)
        if (moved[a](v, b) + moved[b](v, a) != 0)
          throw Error(ErrorCode::InvalidPairing, "pairing is not skew for the action");
}

Subspace pairing_radical(const SkewPairingModule& sp) { return null_space(sp.pairing.transpose()); }

SkewPairingAnalysis analyze_skew_pairing(const SkewPairingModule& sp, std::size_t samples, std::uint64_t seed) {
  validate(sp);
  SkewPairingAnalysis out;
  out.witness = Subspace(sp.module_dim);
  const std::size_t k = sp.abelian_dim;

  auto try_element = [&](const Vector& x) {
    ++out.elements_tested;
    const Matrix r = sp.action(x);
    const Matrix square = r * r;
    if (square.is_zero()) return false;
    out.kind = SkewPairingAnalysis::Kind::SubmoduleInRadical;
    out.element = x;
    out.witness = image(square);
    out.witness_in_radical = pairing_radical(sp).contains(out.witness);
    out.witness_is_submodule = true;
    for (const auto& gen : sp.rho)
      if (!out.witness.contains(out.witness.image_under(gen))) out.witness_is_submodule = false;
    return true;
  };

  for (std::size_t i = 0; i < k; ++i)
    if (try_element(unit_vector(k, i))) return out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vector x = unit_vector(k, i);
      x[j] = 1;
      if (try_element(x)) return out;
    }
  SampleRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    if (try_element(rng.vector(k))) return out;
  return out;
}

}  // namespace metlie
