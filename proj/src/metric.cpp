#include "metlie/metric.hpp"

#include "metlie/error.hpp"
#include "metlie/random.hpp"
#include "metlie/structure.hpp"

namespace metlie {

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw Error(ErrorCode::NonSquare, "Gram matrix is not square");
  if (!gram_.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "Gram matrix is not symmetric");
}

Rational BilinearForm::operator()(const Vector& x, const Vector& y) const { return dot(x, gram_ * y); }

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, BilinearForm form)
    : algebra_(std::move(algebra)), form_(std::move(form)) {
  if (algebra_.dim() != form_.dim())
    throw Error(ErrorCode::DimensionMismatch, "Gram matrix size does not match the algebra dimension");
}

Subspace metric_radical(const MetricLieAlgebra& m) { return null_space(m.gram()); }

bool is_nondegenerate(const MetricLieAlgebra& m) { return metric_radical(m).is_zero(); }

Subspace orthogonal_complement(const MetricLieAlgebra& m, const Subspace& s) {
  return null_space(s.basis().transpose() * m.gram());
}

bool is_totally_isotropic(const MetricLieAlgebra& m, const Subspace& s) {
  return (s.basis().transpose() * m.gram() * s.basis()).is_zero();
}

bool is_nondegenerate_on(const MetricLieAlgebra& m, const Subspace& s) {
  return rank(s.basis().transpose() * m.gram() * s.basis()) == s.dim();
}

Signature signature(const MetricLieAlgebra& m) { return signature_of(m.gram()); }

std::size_t witt_index(const MetricLieAlgebra& m) {
  const auto sig = signature(m);
  return std::min(sig.plus, sig.minus);
}

WittDecomposition witt_decomposition(const MetricLieAlgebra& m, const Subspace& u) {
  if (!is_nondegenerate(m)) throw Error(ErrorCode::DegenerateForm, "witt_decomposition: form is degenerate");
  if (!is_totally_isotropic(m, u)) throw Error(ErrorCode::NotIsotropic, "witt_decomposition: subspace is not totally isotropic");
  const std::size_t n = m.dim(), k = u.dim();
  const Matrix pairing = u.basis().transpose() * m.gram();  // k x n, full row rank

  std::vector<Vector> dual;
  for (std::size_t i = 0; i < k; ++i) {
    auto sol = solve(pairing, unit_vector(k, i));
    if (!sol) throw std::logic_error("witt_decomposition: dual vector does not exist");
    dual.push_back(std::move(*sol));
  }
  // a_i = a'_i - 1/2 sum_k <a'_i, a'_k> u_k makes the a_i mutually orthogonal
  // and isotropic while keeping <a_i, u_k> = delta_ik.
  std::vector<Vector> a_vectors;
  const auto us = u.vectors();
  for (std::size_t i = 0; i < k; ++i) {
    Vector a = dual[i];
    for (std::size_t j = 0; j < k; ++j) {
      const Rational c = m.form()(dual[i], dual[j]) / 2;
      if (c != 0) a = a - c * us[j];
    }
    a_vectors.push_back(std::move(a));
  }
  WittDecomposition out;
  out.a_basis = Matrix::from_columns(n, a_vectors);
  out.a = Subspace::span(out.a_basis);
  out.w = orthogonal_complement(m, u + out.a);
  return out;
}

Subspace j0(const MetricLieAlgebra& m) {
  const auto& g = m.algebra();
  const Subspace n = nilradical(g);
  return center_of(g, n).intersect(bracket_subspaces(g, Subspace::full(g.dim()), n));
}

Subspace reduced_core(const MetricLieAlgebra& m) { return largest_ideal_inside(m.algebra(), metric_radical(m)); }

bool is_reduced(const MetricLieAlgebra& m) { return reduced_core(m).is_zero(); }

Subspace invariance_defect(const MetricLieAlgebra& m) {
  const auto& g = m.algebra();
  const Matrix& gram = m.gram();
  const std::size_t n = g.dim();
  std::vector<Vector> rows;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = y; z < n; ++z) {
      Vector row = zero_vector(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational acc = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (const auto& c = g.structure_constant(i, y, l); c != 0 && gram(l, z) != 0) acc += c * gram(l, z);
          if (const auto& c = g.structure_constant(i, z, l); c != 0 && gram(y, l) != 0) acc += c * gram(y, l);
        }
        row[i] = acc;
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  return null_space(Matrix::from_rows(n, rows));
}

bool is_invariant(const MetricLieAlgebra& m) { return invariance_defect(m).is_full(); }

std::optional<InvarianceWitness> invariance_witness(const MetricLieAlgebra& m) {
  const auto& g = m.algebra();
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x) {
    const Matrix ad = g.ad_basis(x);
    const Matrix lhs = ad.transpose() * m.gram();  // (y, z) -> <[x,y], z>
    const Matrix rhs = m.gram() * ad;              // (y, z) -> <y, [x,z]>
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (lhs(y, z) + rhs(y, z) != 0) return InvarianceWitness{x, y, z, lhs(y, z), -rhs(y, z)};
  }
  return std::nullopt;
}

bool is_skew(const Matrix& a, const Matrix& gram) { return (a.transpose() * gram + gram * a).is_zero(); }

NilInvarianceReport nil_invariance_check(const MetricLieAlgebra& m, std::size_t samples, std::uint64_t seed) {
  NilInvarianceReport report;
  report.samples = samples;
  report.seed = seed;
  const auto& g = m.algebra();
  const std::size_t n = g.dim();

  auto fails = [&](const Vector& x) {
    ++report.vectors_tested;
    const Matrix ad = g.ad(x);
    if (ad.is_zero()) return false;
    return !is_skew(jordan_chevalley(ad).nilpotent, m.gram());
  };
  auto record = [&](Vector x) {
    report.counterexample = std::move(x);
    report.certified = false;
    return report;
  };

  for (std::size_t i = 0; i < n; ++i)
    if (Vector x = unit_vector(n, i); fails(x)) return record(std::move(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector x = unit_vector(n, i);
      x[j] = 1;
      if (fails(x)) return record(std::move(x));
    }
  SampleRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s)
    if (Vector x = rng.vector(n); fails(x)) return record(std::move(x));
  report.certified = true;
  return report;
}

MetricLieAlgebra direct_sum(const MetricLieAlgebra& a, const MetricLieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  Matrix gram(na + nb, na + nb);
  for (std::size_t r = 0; r < na; ++r)
    for (std::size_t c = 0; c < na; ++c) gram(r, c) = a.gram()(r, c);
  for (std::size_t r = 0; r < nb; ++r)
    for (std::size_t c = 0; c < nb; ++c) gram(na + r, na + c) = b.gram()(r, c);
  return MetricLieAlgebra(direct_sum(a.algebra(), b.algebra()), BilinearForm(std::move(gram)));
}

}  // namespace metlie
