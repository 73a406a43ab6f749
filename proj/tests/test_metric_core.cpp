#include "doctest.h"
#include "metlie/catalog.hpp"
#include "metlie/error.hpp"
#include "metlie/metric.hpp"
#include "metlie/skew_pairing.hpp"
#include "metlie/structure.hpp"
#include "support/oracles.hpp"

using namespace metlie;

namespace {

MetricLieAlgebra osc() { return generate({Family::Oscillator, {"1"}, 0}); }
MetricLieAlgebra h3() { return generate({Family::Heisenberg, {}, 0}); }

Subspace coords(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(unit_vector(n, i));
  return Subspace::span(n, vs);
}

}  // namespace

TEST_CASE("oscillator tables") {
  const auto m = osc();
  CHECK(m.algebra().basis_names() == std::vector<std::string>{"A", "X", "Y", "Z"});
  CHECK(m.gram() == Matrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}});
  CHECK(m.algebra().bracket_basis(0, 1) == unit_vector(4, 2));
  CHECK(m.algebra().bracket_basis(0, 2) == Rational(-1) * unit_vector(4, 1));
  CHECK(m.algebra().bracket_basis(1, 2) == unit_vector(4, 3));
}

TEST_CASE("metric invariants of the oscillator") {
  const auto m = osc();
  CHECK(is_nondegenerate(m));
  CHECK(signature(m) == Signature{3, 1, 0});
  CHECK(witt_index(m) == 1);
  CHECK(is_invariant(m));
  CHECK_FALSE(invariance_witness(m));
  CHECK(j0(m) == coords(4, {3}));
  CHECK(reduced_core(m).is_zero());
  CHECK(is_totally_isotropic(m, coords(4, {3})));
  CHECK(orthogonal_complement(m, coords(4, {3})) == coords(4, {1, 2, 3}));
  const auto report = nil_invariance_check(m);
  CHECK(report.certified);
  CHECK(report.samples == 64);
  CHECK(report.vectors_tested == 4 + 6 + 64);
}

TEST_CASE("heisenberg with the identity form is not invariant") {
  const auto m = h3();
  CHECK_FALSE(is_invariant(m));
  const auto w = invariance_witness(m);
  REQUIRE(w);
  CHECK(w->x == 0);
  CHECK(w->y == 1);
  CHECK(w->z == 2);
  CHECK(w->lhs == 1);
  CHECK(w->rhs == 0);
  const auto report = nil_invariance_check(m);
  CHECK_FALSE(report.certified);
  REQUIRE(report.counterexample);
  CHECK(*report.counterexample == unit_vector(3, 0));
  CHECK(invariance_defect(m).dim() < 3);
}

TEST_CASE("abelian forms") {
  const auto m = generate({Family::Abelian, {"2"}, 0});
  CHECK(is_invariant(m));
  CHECK(witt_index(m) == 0);
  CHECK(j0(m).is_zero());
  const auto split = generate({Family::Abelian, {"4", "2"}, 0});
  CHECK(signature(split) == Signature{2, 2, 0});
  CHECK(witt_index(split) == 2);
}

TEST_CASE("degenerate forms and the reduced core") {
  // h3 with <Z, Z> = 0: Z spans the radical and is an ideal.
  const MetricLieAlgebra m(h3().algebra(), BilinearForm(Matrix::diagonal({1, 1, 0})));
  CHECK(metric_radical(m) == coords(3, {2}));
  CHECK(reduced_core(m) == coords(3, {2}));
  CHECK_FALSE(is_reduced(m));
  CHECK(is_invariant(m));
  // r2 with a radical that is not an ideal.
  const MetricLieAlgebra r(LieAlgebra({"A", "X"}, {{0, 1, 1, Rational(1)}}), BilinearForm(Matrix::diagonal({1, 0})));
  CHECK(metric_radical(r) == coords(2, {1}));
  CHECK(reduced_core(r) == coords(2, {1}));
  const MetricLieAlgebra r_other(r.algebra(), BilinearForm(Matrix::diagonal({0, 1})));
  CHECK(reduced_core(r_other).is_zero());
  CHECK_FALSE(is_invariant(r_other));
  CHECK_THROWS_AS(BilinearForm(Matrix{{0, 1}, {0, 0}}), Error);
  CHECK_THROWS_AS(MetricLieAlgebra(r.algebra(), BilinearForm::identity(3)), Error);
}

TEST_CASE("Witt decomposition") {
  const auto m = osc();
  const auto wd = witt_decomposition(m, coords(4, {3}));
  CHECK(wd.a == coords(4, {0}));
  CHECK(wd.w == coords(4, {1, 2}));
  CHECK(m.form()(wd.a_basis.column(0), unit_vector(4, 3)) == 1);
  CHECK_THROWS_AS(witt_decomposition(m, coords(4, {1})), Error);

  // Random split forms: u spanned by the first isotropic directions.
  SampleRng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto extra = static_cast<std::size_t>(rng.uniform(0, 2));
    const std::size_t n = 2 * s + extra;
    // Hyperbolic planes plus a definite part, then a random change of basis.
    Matrix g(n, n);
    for (std::size_t i = 0; i < s; ++i) g(i, s + i) = g(s + i, i) = 1;
    for (std::size_t i = 2 * s; i < n; ++i) g(i, i) = Rational(static_cast<long>(rng.uniform(1, 3)));
    Matrix change = Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) change(r, c) = Rational(static_cast<long>(rng.uniform(-1, 1)));
    const Matrix gram = change.transpose() * g * change;
    const MetricLieAlgebra mm(LieAlgebra::abelian(n), BilinearForm(gram));
    const Matrix inv = oracle::naive_inverse(change);
    std::vector<Vector> u;
    for (std::size_t i = 0; i < s; ++i) u.push_back(inv.column(i));
    const Subspace us = Subspace::span(n, u);
    REQUIRE(is_totally_isotropic(mm, us));
    const auto d = witt_decomposition(mm, us);
    CHECK(d.a.dim() == s);
    CHECK(d.w.dim() == n - 2 * s);
    CHECK(is_totally_isotropic(mm, d.a));
    CHECK((d.a + d.w + us).is_full());
    for (const auto& wv : d.w.vectors()) {
      for (const auto& av : d.a.vectors()) CHECK(mm.form()(wv, av) == 0);
      for (const auto& uv : us.vectors()) CHECK(mm.form()(wv, uv) == 0);
    }
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t k = 0; k < s; ++k)
        CHECK(mm.form()(d.a_basis.column(i), us.vector(k)) == (i == k ? 1 : 0));
    CHECK(is_nondegenerate_on(mm, d.w));
  }
}

TEST_CASE("invariant forms solve the linear invariance system") {
  CHECK(solve_invariant_forms(LieAlgebra::abelian(2)).size() == 3);

  const auto forms = solve_invariant_forms(osc().algebra());
  CHECK(forms.size() >= 2);
  Matrix stacked(0, 16);
  for (const auto& f : forms) stacked = Matrix::vcat(stacked, Matrix::from_rows(16, {f.data()}));
  CHECK(Subspace::span(stacked.transpose()).contains(osc().gram().data()));
  for (const auto& f : forms) CHECK(is_invariant(MetricLieAlgebra(osc().algebra(), BilinearForm(f))));

  for (const auto& f : solve_invariant_forms(h3().algebra()))
    for (std::size_t i = 0; i < 3; ++i) CHECK(f(i, 2) == 0);
}

TEST_CASE("skewness and sums") {
  const auto m = osc();
  CHECK(is_skew(m.algebra().ad_basis(0), m.gram()));
  CHECK_FALSE(is_skew(Matrix::identity(4), m.gram()));
  const auto sum = direct_sum(m, h3());
  CHECK(sum.dim() == 7);
  CHECK_FALSE(is_invariant(sum));
  CHECK(is_invariant(direct_sum(m, m)));
}

TEST_CASE("skew pairing modules") {
  SkewPairingModule bad;
  bad.abelian_dim = 1;
  bad.module_dim = 1;
  bad.rho = {Matrix{{1}}};
  bad.pairing = Matrix{{1}};
  CHECK_THROWS_AS(validate(bad), Error);  // <rho(A)v, A> = 1 but must vanish

  SkewPairingModule nil;
  nil.abelian_dim = 1;
  nil.module_dim = 2;
  nil.rho = {Matrix{{0, 1}, {0, 0}}};
  nil.pairing = Matrix{{0}, {1}};
  validate(nil);
  auto a = analyze_skew_pairing(nil);
  CHECK(a.kind == SkewPairingAnalysis::Kind::Nilpotent);

  SkewPairingModule rot;
  rot.abelian_dim = 1;
  rot.module_dim = 2;
  rot.rho = {Matrix{{0, -1}, {1, 0}}};
  rot.pairing = Matrix(2, 1);
  a = analyze_skew_pairing(rot);
  CHECK(a.kind == SkewPairingAnalysis::Kind::SubmoduleInRadical);
  CHECK(a.witness.is_full());
  CHECK(a.witness_in_radical);
  CHECK(a.witness_is_submodule);

  SampleRng rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto sp = oracle::random_skew_pairing(rng);
    validate(sp);
    const auto r = analyze_skew_pairing(sp);
    if (r.kind == SkewPairingAnalysis::Kind::SubmoduleInRadical) {
      CHECK_FALSE(r.witness.is_zero());
      CHECK(r.witness_in_radical);
      CHECK(r.witness_is_submodule);
      CHECK(pairing_radical(sp).contains(r.witness));
    }
  }
}
