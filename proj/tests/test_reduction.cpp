#include "doctest.h"
#include "metlie/catalog.hpp"
#include "metlie/error.hpp"
#include "metlie/reduction.hpp"
#include "metlie/structure.hpp"

using namespace metlie;

namespace {

MetricLieAlgebra osc() { return generate({Family::Oscillator, {"1"}, 0}); }

Subspace line(std::size_t n, std::size_t i) { return Subspace::span(n, {unit_vector(n, i)}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("oscillator reduces in one step to a Euclidean plane") {
  const auto m = osc();
  const Subspace j = find_isotropic_central_line(m);
  CHECK(j == line(4, 3));
  const auto step = reduce_once(m, j);
  CHECK(step.a == line(4, 0));
  CHECK(step.quotient.dim() == 2);
  CHECK(step.quotient.algebra().is_abelian());
  CHECK(step.quotient.gram() == Matrix::identity(2));
  CHECK(step.quotient.algebra().basis_names() == std::vector<std::string>{"X", "Y"});
  // omega(X, Y) = Z, abar = rotation, xi = 0.
  CHECK(step.omega[0][1] == Vector{1});
  CHECK(step.omega[1][0] == Vector{-1});
  REQUIRE(step.abar.size() == 1);
  CHECK(step.abar[0] == Matrix{{0, -1}, {1, 0}});
  CHECK(step.xi[0].is_zero());
  CHECK(verify_cocycle_derivation_identity(step));
  CHECK(verify_xi_vanishes(step));
  CHECK(verify_omega_cocycle(step));
  CHECK(verify_abar_derivations(step));
  CHECK(verify_bracket_reconstruction(step));

  auto mutated = step;
  mutated.omega[0][1][0] = -mutated.omega[0][1][0];
  CHECK_FALSE(verify_cocycle_derivation_identity(mutated));

  const auto chain = complete_reduction(m);
  CHECK(chain.steps.size() == 1);
  CHECK(chain.terminal.dim() == 2);
  CHECK(chain.terminal_abelian);
  CHECK(chain.terminal_positive_definite);
}

TEST_CASE("reduction chains of catalog instances") {
  const auto flat = generate({Family::Abelian, {"3"}, 0});
  CHECK(complete_reduction(flat).steps.empty());

  const auto de = generate({Family::DoubleExtensionChain, {"2"}, 7});
  CHECK(de.dim() == 6);
  CHECK(witt_index(de) == 2);
  CHECK(is_invariant(de));
  const auto chain = complete_reduction(de);
  CHECK(chain.steps.size() == 2);
  CHECK(chain.terminal.dim() == de.dim() - 4);
  CHECK(chain.terminal_positive_definite);

  const auto split = generate({Family::Abelian, {"4", "2"}, 0});
  const auto c2 = complete_reduction(split);
  CHECK(c2.steps.size() == 2);
  CHECK(c2.terminal.dim() == 0);

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto m = generate({Family::RandomSolvable, {"3"}, seed});
    const auto sig = signature(m);
    const auto c = complete_reduction(m);
    CHECK(c.terminal.dim() == m.dim() - 2 * std::min(sig.plus, sig.minus));
    CHECK(c.terminal_positive_definite);
    for (const auto& step : c.steps) {
      CHECK(verify_cocycle_derivation_identity(step));
      CHECK(verify_xi_vanishes(step));
      CHECK(verify_bracket_reconstruction(step));
    }
  }
}

TEST_CASE("degenerate invariant forms are first divided by the radical") {
  const auto h = generate({Family::Heisenberg, {}, 0});
  const MetricLieAlgebra m(h.algebra(), BilinearForm(Matrix::diagonal({1, 1, 0})));
  const auto chain = complete_reduction(m);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].kind == ReductionStep::Kind::RadicalQuotient);
  CHECK(chain.terminal.dim() == 2);
  CHECK(chain.terminal_positive_definite);
}

TEST_CASE("reduction preconditions") {
  const auto m = osc();
  CHECK(code_of([&] { reduce_once(m, line(4, 1)); }) == ErrorCode::NotCentral);
  const auto flat = generate({Family::Abelian, {"2"}, 0});
  CHECK(code_of([&] { reduce_once(flat, line(2, 0)); }) == ErrorCode::NotIsotropic);
  CHECK(code_of([&] { find_isotropic_central_line(flat); }) == ErrorCode::Abelian);
  CHECK(code_of([&] { complete_reduction(generate({Family::Heisenberg, {}, 0})); }) == ErrorCode::NotNilInvariant);
  const LieAlgebra sl2({"H", "E", "F"}, {{0, 1, 1, Rational(2)}, {0, 2, 2, Rational(-2)}, {1, 2, 0, Rational(1)}});
  const MetricLieAlgebra killing(sl2, BilinearForm(Matrix{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}}));
  CHECK(is_invariant(killing));
  CHECK(code_of([&] { complete_reduction(killing); }) == ErrorCode::NonSolvable);
}

TEST_CASE("double extension") {
  const MetricLieAlgebra plane(LieAlgebra::abelian(std::vector<std::string>{"X", "Y"}), BilinearForm::identity(2));
  const Matrix rot{{0, -1}, {1, 0}};
  CHECK(double_extension(plane, rot, "A", "Z") == osc());
  CHECK(code_of([&] { double_extension(plane, Matrix::identity(2)); }) == ErrorCode::NotSkew);
  // A -> A, Z -> -Z is skew but [A, X] = Y is not preserved.
  const auto o = osc();
  const Matrix scale = Matrix::diagonal({1, 0, 0, -1});
  REQUIRE(is_skew(scale, o.gram()));
  CHECK(code_of([&] { double_extension(o, scale); }) == ErrorCode::NotDerivation);
  CHECK(code_of([&] { double_extension(generate({Family::Heisenberg, {}, 0}), Matrix(3, 3)); }) ==
        ErrorCode::NotInvariant);
}

TEST_CASE("double extension followed by reduction recovers the base") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto base = generate(
        {Family::DoubleExtensionChain, {std::to_string(seed % 2), std::to_string(2 + seed % 3)}, seed});
    const auto derivations = skew_derivations(base);
    REQUIRE_FALSE(derivations.empty());
    const Matrix& d = derivations[seed % derivations.size()];
    const auto ext = double_extension(base, d);
    const auto step = reduce_once(ext, line(ext.dim(), ext.dim() - 1));
    CHECK(step.quotient.algebra().brackets() == base.algebra().brackets());
    CHECK(step.quotient.gram() == base.gram());
    REQUIRE(step.abar.size() == 1);
    CHECK(step.abar[0] == d);
  }
}

TEST_CASE("center of the nilradical can exceed the center") {
  // V = P1 + P2 + R u, first extension rotates P1, the second rotates P2 and
  // sends A -> u -> -Z. u commutes with the nilradical but [A1, u] = -Z.
  const MetricLieAlgebra v(LieAlgebra::abelian(std::vector<std::string>{"e1", "e2", "e3", "e4", "u"}),
                           BilinearForm::identity(5));
  Matrix d1(5, 5);
  d1(1, 0) = 1;
  d1(0, 1) = -1;
  const auto h = double_extension(v, d1, "A", "Z");  // basis A e1 e2 e3 e4 u Z
  Matrix d2(7, 7);
  d2(4, 3) = 1;
  d2(3, 4) = -1;
  d2(5, 0) = 1;   // A -> u
  d2(6, 5) = -1;  // u -> -Z
  const auto g = double_extension(h, d2, "A1", "Z1");
  REQUIRE(is_invariant(g));
  REQUIRE(is_nondegenerate(g));
  REQUIRE(is_solvable(g.algebra()));
  const Subspace n = nilradical(g.algebra());
  const Subspace zn = center_of(g.algebra(), n);
  const Vector u = unit_vector(9, 6);
  CHECK(zn.contains(u));
  CHECK_FALSE(center(g.algebra()).contains(u));
  CHECK(zn.dim() > center(g.algebra()).dim());
  // The reduction still goes through.
  const auto chain = complete_reduction(g);
  CHECK(chain.terminal_positive_definite);
  CHECK(chain.terminal.dim() == g.dim() - 2 * witt_index(g));
}
