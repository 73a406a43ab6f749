#include "metlie/structure.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "metlie/error.hpp"
#include "metlie/linalg.hpp"

namespace metlie {

namespace {

// Incremental echelon basis for membership tests during closure. Each stored
// row has a leading 1 and zeros at the pivots of earlier rows, so reducing
// against the rows in insertion order leaves zeros at every pivot.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Returns the reduced vector if it was new (and stores it), else empty.
  std::optional<Vector> insert(Vector v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational c = v[pivots_[k]];
      if (c == 0) continue;
      const Vector& row = rows_[k];
      for (std::size_t i = pivots_[k]; i < length_; ++i)
        if (row[i] != 0) v[i] -= c * row[i];
    }
    auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (lead == v.end()) return std::nullopt;
    const Rational inv = 1 / *lead;
    for (auto& x : v) x *= inv;
    pivots_.push_back(static_cast<std::size_t>(lead - v.begin()));
    rows_.push_back(v);
    return v;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t length_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Subspace> stabilizing_series(const LieAlgebra& g, bool derived) {
  const Subspace whole = Subspace::full(g.dim());
  std::vector<Subspace> series{whole};
  for (;;) {
    const Subspace& last = series.back();
    Subspace next = bracket_subspaces(g, derived ? last : whole, last);
    if (next == last) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::string unit_name(const LieAlgebra& g, const Vector& v, const std::string& fallback) {
  std::size_t hit = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || hit != v.size()) return fallback;
    hit = i;
  }
  return hit == v.size() ? fallback : g.basis_names()[hit];
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) { return stabilizing_series(g, true); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g) { return stabilizing_series(g, false); }

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().is_zero(); }

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

Subspace bracket_subspaces(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vector> products;
  const auto uv = u.vectors();
  const auto vv = v.vectors();
  for (const auto& x : uv)
    for (const auto& y : vv) products.push_back(g.bracket(x, y));
  return Subspace::span(g.dim(), products);
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  // [x, s_j] = -ad(s_j) x
  Matrix stacked(0, g.dim());
  for (const auto& v : s.vectors()) stacked = Matrix::vcat(stacked, g.ad(v));
  return null_space(stacked);
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& v : s.vectors())
      if (!s.contains(g.bracket(unit_vector(g.dim(), i), v))) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto vs = s.vectors();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!s.contains(g.bracket(vs[a], vs[b]))) return false;
  return true;
}

Subspace ideal_generated_by(const LieAlgebra& g, const Subspace& s) {
  Subspace current = s;
  const Subspace whole = Subspace::full(g.dim());
  for (;;) {
    Subspace next = current + bracket_subspaces(g, whole, current);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
}

Subspace nilradical(const LieAlgebra& g) {
  if (!is_solvable(g)) throw Error(ErrorCode::NonSolvable, "nilradical: algebra is not solvable");
  const std::size_t n = g.dim();
  if (n == 0) return Subspace(0);

  std::vector<Matrix> generators;
  for (std::size_t i = 0; i < n; ++i) generators.push_back(g.ad_basis(i));

  EchelonBasis echelon(n * n);
  std::vector<Matrix> basis;
  std::deque<std::size_t> pending;
  auto add = [&](const Matrix& m) {
    if (auto reduced = echelon.insert(m.data())) {
      Matrix b(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) b(r, c) = (*reduced)[r * n + c];
      basis.push_back(std::move(b));
      pending.push_back(basis.size() - 1);
    }
  };
  for (const auto& a : generators) add(a);
  while (!pending.empty()) {
    const std::size_t idx = pending.front();
    pending.pop_front();
    for (const auto& a : generators) add(a * basis[idx]);
  }

  // Row b, column i: tr(ad(e_i) * b).
  Matrix traces(basis.size(), n);
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t i = 0; i < n; ++i) {
      Rational t = 0;
      const Matrix& a = generators[i];
      const Matrix& m = basis[b];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (a(r, c) != 0 && m(c, r) != 0) t += a(r, c) * m(c, r);
      traces(b, i) = t;
    }
  return null_space(traces);
}

Subspace center_of(const LieAlgebra& g, const Subspace& s) { return s.intersect(centralizer(g, s)); }

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "quotient: ambient dimension");
  if (!is_ideal(g, ideal)) throw Error(ErrorCode::NotAnIdeal, "quotient: subspace is not an ideal");
  const auto reps = ideal.complement_coordinates();
  Matrix proj = ideal.complement_projection();
  std::vector<std::string> names;
  for (auto r : reps) names.push_back(g.basis_names()[r]);
  std::vector<BracketEntry> entries;
  for (std::size_t s = 0; s < reps.size(); ++s)
    for (std::size_t t = s + 1; t < reps.size(); ++t) {
      const Vector image = proj * g.bracket_basis(reps[s], reps[t]);
      for (std::size_t k = 0; k < image.size(); ++k)
        if (image[k] != 0) entries.push_back({s, t, k, image[k]});
    }
  return {LieAlgebra(std::move(names), entries), std::move(proj), reps};
}

Subspace largest_ideal_inside(const LieAlgebra& g, const Subspace& within) {
  Subspace current = within;
  const std::size_t n = g.dim();
  while (!current.is_zero()) {
    const Matrix proj = current.complement_projection();
    Matrix conditions(0, current.dim());
    for (std::size_t i = 0; i < n; ++i) conditions = Matrix::vcat(conditions, proj * (g.ad_basis(i) * current.basis()));
    Subspace next = image(current.basis() * kernel(conditions));
    if (next.dim() == current.dim()) break;
    current = std::move(next);
  }
  return current;
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& sub) {
  if (!is_subalgebra(g, sub)) throw Error(ErrorCode::NotAnIdeal, "restrict_to: subspace is not a subalgebra");
  const auto vs = sub.vectors();
  std::vector<std::string> names;
  for (std::size_t k = 0; k < vs.size(); ++k) names.push_back(unit_name(g, vs[k], "s" + std::to_string(k + 1)));
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const Vector c = sub.coordinates(g.bracket(vs[a], vs[b]));
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) entries.push_back({a, b, k, c[k]});
    }
  return LieAlgebra(std::move(names), entries);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names = a.basis_names();
  for (const auto& name : b.basis_names()) {
    std::string candidate = name;
    while (std::find(names.begin(), names.end(), candidate) != names.end()) candidate += "'";
    names.push_back(candidate);
  }
  std::vector<BracketEntry> entries = a.brackets();
  const std::size_t shift = a.dim();
  for (auto e : b.brackets()) entries.push_back({e.i + shift, e.j + shift, e.k + shift, e.c});
  return LieAlgebra(std::move(names), entries);
}

}  // namespace metlie
