#include "metlie/catalog.hpp"

#include <charconv>

#include "metlie/error.hpp"
#include "metlie/random.hpp"
#include "metlie/reduction.hpp"

namespace metlie {

namespace {

std::size_t parse_count(const std::string& text, const char* what) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorCode::InvalidParams, std::string(what) + ": expected a non-negative integer, got \"" + text + "\"");
  return value;
}

void expect_params(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  const auto n = spec.params.size();
  if (n < lo || n > hi)
    throw Error(ErrorCode::InvalidParams, to_string(spec.family) + ": wrong number of parameters");
}

std::vector<std::string> indexed(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(count == 1 ? stem : stem + std::to_string(i));
  return out;
}

MetricLieAlgebra make_abelian(const FamilySpec& spec) {
  expect_params(spec, 1, 2);
  const std::size_t n = parse_count(spec.params[0], "abelian dimension");
  const std::size_t negatives = spec.params.size() > 1 ? parse_count(spec.params[1], "abelian negatives") : 0;
  if (negatives > n) throw Error(ErrorCode::InvalidParams, "abelian: more negative directions than dimensions");
  Matrix gram = Matrix::identity(n);
  for (std::size_t i = n - negatives; i < n; ++i) gram(i, i) = -1;
  return MetricLieAlgebra(LieAlgebra::abelian(n), BilinearForm(std::move(gram)));
}

MetricLieAlgebra make_heisenberg(const FamilySpec& spec) {
  expect_params(spec, 0, 1);
  const std::size_t k = spec.params.empty() ? 1 : parse_count(spec.params[0], "heisenberg rank");
  if (k == 0) throw Error(ErrorCode::InvalidParams, "heisenberg: rank must be positive");
  std::vector<std::string> names = indexed("X", k);
  const auto ys = indexed("Y", k);
  names.insert(names.end(), ys.begin(), ys.end());
  names.push_back("Z");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < k; ++i) entries.push_back({i, k + i, 2 * k, Rational(1)});
  return MetricLieAlgebra(LieAlgebra(std::move(names), entries), BilinearForm::identity(2 * k + 1));
}

MetricLieAlgebra make_oscillator(const FamilySpec& spec) {
  if (spec.params.empty()) throw Error(ErrorCode::InvalidParams, "oscillator: at least one frequency required");
  const std::size_t k = spec.params.size();
  std::vector<std::string> names;
  const auto xs = indexed("X", k), ys = indexed("Y", k);
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(xs[i]);
    names.push_back(ys[i]);
  }
  Matrix d(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    Rational freq;
    try {
      freq = parse_rational(spec.params[i]);
    } catch (const Error&) {
      throw Error(ErrorCode::InvalidParams, "oscillator: frequency \"" + spec.params[i] + "\" is not a rational");
    }
    if (freq <= 0) throw Error(ErrorCode::InvalidParams, "oscillator: frequencies must be positive");
    d(2 * i + 1, 2 * i) = freq;   // X_i -> freq Y_i
    d(2 * i, 2 * i + 1) = -freq;  // Y_i -> -freq X_i
  }
  const MetricLieAlgebra base(LieAlgebra::abelian(std::move(names)), BilinearForm::identity(2 * k));
  return double_extension(base, d, "A", "Z");
}

MetricLieAlgebra make_r2(const FamilySpec& spec) {
  expect_params(spec, 0, 0);
  return MetricLieAlgebra(LieAlgebra({"A", "X"}, {{0, 1, 1, Rational(1)}}), BilinearForm::identity(2));
}

Matrix random_skew_derivation(const MetricLieAlgebra& m, SampleRng& rng) {
  const auto basis = skew_derivations(m);
  const std::size_t n = m.dim();
  if (basis.empty()) return Matrix(n, n);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Matrix d(n, n);
    for (const auto& b : basis) {
      const auto c = rng.uniform(-2, 2);
      if (c != 0) d += Rational(static_cast<long>(c)) * b;
    }
    if (!d.is_zero()) return d;
  }
  return basis.front();
}

MetricLieAlgebra extend_repeatedly(MetricLieAlgebra current, std::size_t depth, SampleRng& rng) {
  for (std::size_t level = 0; level < depth; ++level)
    current = double_extension(current, random_skew_derivation(current, rng));
  return current;
}

MetricLieAlgebra make_chain(const FamilySpec& spec) {
  expect_params(spec, 1, 2);
  const std::size_t depth = parse_count(spec.params[0], "double_extension_chain depth");
  const std::size_t base_dim = spec.params.size() > 1 ? parse_count(spec.params[1], "double_extension_chain base") : 2;
  SampleRng rng(spec.seed);
  return extend_repeatedly(MetricLieAlgebra(LieAlgebra::abelian(base_dim), BilinearForm::identity(base_dim)), depth,
                           rng);
}

MetricLieAlgebra make_random_solvable(const FamilySpec& spec) {
  expect_params(spec, 1, 1);
  const std::size_t depth = parse_count(spec.params[0], "random_solvable depth");
  SampleRng rng(spec.seed);
  const auto base_dim = static_cast<std::size_t>(rng.uniform(1, 3));
  Vector diag(base_dim);
  for (auto& x : diag) x = Rational(static_cast<long>(rng.uniform(1, 3)));
  return extend_repeatedly(MetricLieAlgebra(LieAlgebra::abelian(base_dim), BilinearForm(Matrix::diagonal(diag))),
                           depth, rng);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Abelian: return "abelian";
    case Family::Heisenberg: return "heisenberg";
    case Family::Oscillator: return "oscillator";
    case Family::R2: return "r2";
    case Family::DoubleExtensionChain: return "double_extension_chain";
    case Family::RandomSolvable: return "random_solvable";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (auto f : {Family::Abelian, Family::Heisenberg, Family::Oscillator, Family::R2, Family::DoubleExtensionChain,
                 Family::RandomSolvable})
    if (to_string(f) == name) return f;
  throw Error(ErrorCode::InvalidParams, "unknown family \"" + name + "\"");
}

MetricLieAlgebra generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Abelian: return make_abelian(spec);
    case Family::Heisenberg: return make_heisenberg(spec);
    case Family::Oscillator: return make_oscillator(spec);
    case Family::R2: return make_r2(spec);
    case Family::DoubleExtensionChain: return make_chain(spec);
    case Family::RandomSolvable: return make_random_solvable(spec);
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

std::vector<Matrix> solve_invariant_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Unknown S(r, c), r <= c, at a packed index.
  std::vector<std::size_t> index(n * n);
  std::size_t unknowns = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) index[r * n + c] = index[c * n + r] = unknowns++;

  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix ad = g.ad_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        Vector row = zero_vector(unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          if (ad(k, c) != 0) row[index[r * n + k]] += ad(k, c);
          if (ad(k, r) != 0) row[index[k * n + c]] += ad(k, r);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  }
  const Matrix basis = kernel(Matrix::from_rows(unknowns, rows));
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Matrix s(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) = basis(index[r * n + c], b);
    out.push_back(std::move(s));
  }
  return out;
}

MetricLieAlgebra perturb_form(const MetricLieAlgebra& m, std::uint64_t seed) {
  SampleRng rng(seed);
  const std::size_t n = m.dim();
  if (n == 0) throw Error(ErrorCode::InvalidParams, "perturb_form: empty algebra");
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
    auto delta = rng.uniform(-3, 2);
    if (delta >= 0) ++delta;  // nonzero in [-3, 3]
    Matrix gram = m.gram();
    gram(i, j) += Rational(static_cast<long>(delta));
    if (i != j) gram(j, i) += Rational(static_cast<long>(delta));
    MetricLieAlgebra candidate(m.algebra(), BilinearForm(std::move(gram)));
    if (!is_invariant(candidate)) return candidate;
  }
  throw Error(ErrorCode::InvalidParams, "perturb_form: every perturbation stayed invariant");
}

}  // namespace metlie
