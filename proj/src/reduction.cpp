#include "metlie/reduction.hpp"

#include <algorithm>

#include "metlie/error.hpp"
#include "metlie/structure.hpp"

namespace metlie {

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rational(0);
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Rational r(sqrt(num), sqrt(den));
  r.canonicalize();
  return r;
}

// Nonzero isotropic combination alpha*u + v, or nullopt.
std::optional<Vector> isotropic_in_plane(const BilinearForm& form, const Vector& u, const Vector& v) {
  const Rational a = form(u, u), b = form(u, v), c = form(v, v);
  // q(alpha u + v) = a alpha^2 + 2 b alpha + c
  std::optional<Rational> alpha;
  if (a == 0) {
    if (b != 0) alpha = -c / (2 * b);
  } else if (auto root = rational_sqrt(b * b - a * c)) {
    alpha = (-b + *root) / a;
  }
  if (!alpha) return std::nullopt;
  Vector x = (*alpha) * u + v;
  if (is_zero(x)) return std::nullopt;
  return x;
}

std::string unit_or(const std::vector<std::string>& names, const Vector& v, const std::string& fallback) {
  std::size_t hit = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || hit != v.size()) return fallback;
    hit = i;
  }
  return hit == v.size() ? fallback : names[hit];
}

std::string fresh_name(const std::vector<std::string>& used, const std::string& stem) {
  if (std::find(used.begin(), used.end(), stem) == used.end()) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (std::find(used.begin(), used.end(), candidate) == used.end()) return candidate;
  }
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
      const Vector lhs = d * g.bracket_basis(i, j);
      const Vector rhs = g.bracket(d * ei, ej) + g.bracket(ei, d * ej);
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

std::optional<Vector> find_isotropic_vector(const MetricLieAlgebra& m, const Subspace& within, LineChoice choice) {
  std::vector<Vector> basis = within.vectors();
  if (choice == LineChoice::Last) std::reverse(basis.begin(), basis.end());
  const auto& form = m.form();
  for (const auto& v : basis)
    if (form(v, v) == 0) return v;
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < basis.size(); ++q) {
      if (p == q) continue;
      for (int a = -2; a <= 2; ++a) {
        Vector x = Rational(a) * basis[p] + basis[q];
        if (form(x, x) == 0 && !is_zero(x)) return x;
      }
    }
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = p + 1; q < basis.size(); ++q)
      if (auto x = isotropic_in_plane(form, basis[p], basis[q])) return x;
  if (basis.empty()) return std::nullopt;
  // Diagonalise the restricted form and retry on pairs of the new basis.
  const Matrix& b = within.basis();
  const auto diag = congruence_diagonalize(b.transpose() * m.gram() * b);
  std::vector<Vector> adapted;
  for (std::size_t c = 0; c < diag.basis_change.cols(); ++c) adapted.push_back(b * diag.basis_change.column(c));
  if (choice == LineChoice::Last) std::reverse(adapted.begin(), adapted.end());
  for (std::size_t p = 0; p < adapted.size(); ++p) {
    if (form(adapted[p], adapted[p]) == 0) return adapted[p];
    for (std::size_t q = p + 1; q < adapted.size(); ++q)
      if (auto x = isotropic_in_plane(form, adapted[p], adapted[q])) return x;
  }
  return std::nullopt;
}

Subspace find_isotropic_central_line(const MetricLieAlgebra& m, LineChoice choice) {
  const auto& g = m.algebra();
  if (!is_solvable(g)) throw Error(ErrorCode::NonSolvable, "find_isotropic_central_line: algebra is not solvable");
  if (!is_nondegenerate(m)) throw Error(ErrorCode::DegenerateForm, "find_isotropic_central_line: form is degenerate");
  if (!is_invariant(m)) throw Error(ErrorCode::NotNilInvariant, "find_isotropic_central_line: form is not invariant");
  if (g.is_abelian()) throw Error(ErrorCode::Abelian, "find_isotropic_central_line: algebra is abelian");
  // g acts nilpotently on j0, so j0 meets the center nontrivially.
  const Subspace ideal = j0(m).intersect(center(g));
  auto v = find_isotropic_vector(m, ideal, choice);
  if (!v)
    throw Error(ErrorCode::NoRationalIsotropicVector, "find_isotropic_central_line: j0 has no central isotropic vector");
  Subspace line = Subspace::span(g.dim(), {*v});
  if (!center(g).contains(line)) throw Error(ErrorCode::NotCentral, "find_isotropic_central_line: line is not central");
  return line;
}

ReductionStep reduce_once(const MetricLieAlgebra& m, const Subspace& j) {
  const auto& g = m.algebra();
  const std::size_t n = g.dim();
  if (j.ambient_dim() != n) throw Error(ErrorCode::DimensionMismatch, "reduce_once: ideal lives in another space");
  if (!is_nondegenerate(m)) throw Error(ErrorCode::DegenerateForm, "reduce_once: form is degenerate");
  if (!center(g).contains(j)) throw Error(ErrorCode::NotCentral, "reduce_once: ideal is not central");
  if (!is_totally_isotropic(m, j)) throw Error(ErrorCode::NotIsotropic, "reduce_once: ideal is not totally isotropic");

  ReductionStep step;
  step.kind = ReductionStep::Kind::IsotropicCentral;
  step.input = m;
  step.j = j;
  const auto witt = witt_decomposition(m, j);
  step.a = witt.a;
  step.w = witt.w;
  step.a_basis = witt.a_basis;
  step.w_basis = witt.w.basis();
  if (!is_ideal(g, orthogonal_complement(m, j)))
    throw Error(ErrorCode::NotAnIdeal, "reduce_once: orthogonal complement of the ideal is not an ideal");

  const std::size_t da = j.dim(), dw = step.w.dim(), dj = j.dim();
  const Matrix full = Matrix::hcat(Matrix::hcat(step.a_basis, step.w_basis), j.basis());
  const Matrix to_coords = inverse(full);
  struct Parts {
    Vector a, w, j;
  };
  auto split = [&](const Vector& v) {
    const Vector c = to_coords * v;
    Parts p;
    p.a.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(da));
    p.w.assign(c.begin() + static_cast<std::ptrdiff_t>(da), c.begin() + static_cast<std::ptrdiff_t>(da + dw));
    p.j.assign(c.begin() + static_cast<std::ptrdiff_t>(da + dw), c.end());
    return p;
  };

  const auto ws = step.w.vectors();
  std::vector<BracketEntry> entries;
  step.omega.assign(dw, std::vector<Vector>(dw, zero_vector(dj)));
  for (std::size_t p = 0; p < dw; ++p)
    for (std::size_t q = p + 1; q < dw; ++q) {
      const Parts parts = split(g.bracket(ws[p], ws[q]));
      if (!is_zero(parts.a)) throw std::logic_error("reduce_once: bracket leaves j^perp");
      for (std::size_t k = 0; k < dw; ++k)
        if (parts.w[k] != 0) entries.push_back({p, q, k, parts.w[k]});
      step.omega[p][q] = parts.j;
      step.omega[q][p] = Rational(-1) * parts.j;
    }
  std::vector<std::string> names;
  for (std::size_t p = 0; p < dw; ++p) names.push_back(unit_or(g.basis_names(), ws[p], "w" + std::to_string(p + 1)));
  step.quotient = MetricLieAlgebra(LieAlgebra(std::move(names), entries),
                                   BilinearForm(step.w_basis.transpose() * m.gram() * step.w_basis));

  for (std::size_t t = 0; t < da; ++t) {
    Matrix abar(dw, dw), xi(dj, dw);
    const Vector at = step.a_basis.column(t);
    for (std::size_t q = 0; q < dw; ++q) {
      const Parts parts = split(g.bracket(at, ws[q]));
      if (!is_zero(parts.a)) throw std::logic_error("reduce_once: [a, w] leaves j^perp");
      for (std::size_t k = 0; k < dw; ++k) abar(k, q) = parts.w[k];
      for (std::size_t k = 0; k < dj; ++k) xi(k, q) = parts.j[k];
    }
    step.abar.push_back(std::move(abar));
    step.xi.push_back(std::move(xi));
  }
  return step;
}

ReductionStep reduce_by_radical(const MetricLieAlgebra& m) {
  const auto& g = m.algebra();
  const Subspace r = metric_radical(m);
  Quotient q = quotient(g, r);  // throws NotAnIdeal
  ReductionStep step;
  step.kind = ReductionStep::Kind::RadicalQuotient;
  step.input = m;
  step.j = r;
  step.a = Subspace(g.dim());
  std::vector<Vector> reps;
  for (auto c : q.representatives) reps.push_back(unit_vector(g.dim(), c));
  step.w_basis = Matrix::from_columns(g.dim(), reps);
  step.w = Subspace::span(step.w_basis);
  step.a_basis = Matrix(g.dim(), 0);
  step.quotient = MetricLieAlgebra(std::move(q.algebra),
                                   BilinearForm(step.w_basis.transpose() * m.gram() * step.w_basis));
  return step;
}

bool verify_cocycle_derivation_identity(const ReductionStep& step) {
  const auto& gq = step.quotient.gram();
  const std::size_t dw = step.w_basis.cols();
  for (std::size_t t = 0; t < step.abar.size(); ++t) {
    const Vector at = step.a_basis.column(t);
    const Matrix lhs = step.abar[t].transpose() * gq;  // (p, q) -> <abar e_p, e_q>
    for (std::size_t p = 0; p < dw; ++p)
      for (std::size_t q = 0; q < dw; ++q) {
        const Vector omega = step.j.basis() * step.omega[p][q];
        if (lhs(p, q) != step.input.form()(omega, at)) return false;
      }
  }
  return true;
}

bool verify_xi_vanishes(const ReductionStep& step) {
  return std::all_of(step.xi.begin(), step.xi.end(), [](const Matrix& x) { return x.is_zero(); });
}

bool verify_omega_cocycle(const ReductionStep& step) {
  if (step.kind == ReductionStep::Kind::RadicalQuotient) return true;
  const auto& q = step.quotient.algebra();
  const std::size_t dw = q.dim(), dj = step.j.dim();
  auto omega = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(dj);
    for (std::size_t p = 0; p < dw; ++p) {
      if (x[p] == 0) continue;
      for (std::size_t r = 0; r < dw; ++r)
        if (y[r] != 0) out = out + (x[p] * y[r]) * step.omega[p][r];
    }
    return out;
  };
  for (std::size_t p = 0; p < dw; ++p) {
    if (!is_zero(step.omega[p][p])) return false;
    for (std::size_t r = p + 1; r < dw; ++r)
      if (step.omega[p][r] + step.omega[r][p] != zero_vector(dj)) return false;
  }
  for (std::size_t x = 0; x < dw; ++x)
    for (std::size_t y = x + 1; y < dw; ++y)
      for (std::size_t z = y + 1; z < dw; ++z) {
        const Vector ex = unit_vector(dw, x), ey = unit_vector(dw, y), ez = unit_vector(dw, z);
        const Vector sum = omega(q.bracket(ex, ey), ez) + omega(q.bracket(ey, ez), ex) + omega(q.bracket(ez, ex), ey);
        if (!is_zero(sum)) return false;
      }
  return true;
}

bool verify_abar_derivations(const ReductionStep& step) {
  const auto& q = step.quotient.algebra();
  const std::size_t dw = q.dim();
  for (const auto& d : step.abar)
    for (std::size_t x = 0; x < dw; ++x)
      for (std::size_t y = x + 1; y < dw; ++y) {
        const Vector ex = unit_vector(dw, x), ey = unit_vector(dw, y);
        if (d * q.bracket(ex, ey) != q.bracket(d * ex, ey) + q.bracket(ex, d * ey)) return false;
      }
  return true;
}

bool verify_bracket_reconstruction(const ReductionStep& step) {
  if (step.kind == ReductionStep::Kind::RadicalQuotient) {
    // Projection must intertwine the brackets.
    const auto& g = step.input.algebra();
    const auto& q = step.quotient.algebra();
    const Matrix proj = step.j.complement_projection();
    const std::size_t n = g.dim();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (proj * g.bracket_basis(x, y) != q.bracket(proj * unit_vector(n, x), proj * unit_vector(n, y)))
          return false;
    return true;
  }
  const auto& g = step.input.algebra();
  const auto& q = step.quotient.algebra();
  const std::size_t dw = q.dim();
  const auto ws = step.w.vectors();
  const auto js = step.j.vectors();
  const Matrix& jb = step.j.basis();
  for (std::size_t p = 0; p < dw; ++p)
    for (std::size_t r = 0; r < dw; ++r) {
      const Vector expected = step.w_basis * q.bracket_basis(p, r) + jb * step.omega[p][r];
      if (g.bracket(ws[p], ws[r]) != expected) return false;
    }
  for (const auto& z : js) {
    for (const auto& w : ws)
      if (!is_zero(g.bracket(w, z))) return false;
    for (const auto& z2 : js)
      if (!is_zero(g.bracket(z, z2))) return false;
  }
  for (std::size_t t = 0; t < step.abar.size(); ++t) {
    const Vector at = step.a_basis.column(t);
    for (std::size_t p = 0; p < dw; ++p) {
      const Vector expected = step.w_basis * step.abar[t].column(p) + jb * step.xi[t].column(p);
      if (g.bracket(at, ws[p]) != expected) return false;
    }
    for (const auto& z : js)
      if (!is_zero(g.bracket(at, z))) return false;
  }
  return true;
}

ReductionChain complete_reduction(const MetricLieAlgebra& m, LineChoice choice) {
  if (!is_solvable(m.algebra())) throw Error(ErrorCode::NonSolvable, "complete_reduction: algebra is not solvable");
  if (!is_invariant(m)) throw Error(ErrorCode::NotNilInvariant, "complete_reduction: form is not invariant");
  ReductionChain chain;
  MetricLieAlgebra current = m;
  if (!is_nondegenerate(current)) {
    chain.steps.push_back(reduce_by_radical(current));
    current = chain.steps.back().quotient;
  }
  for (;;) {
    const auto sig = signature(current);
    const bool abelian = current.algebra().is_abelian();
    if (abelian && sig.minus == 0) break;
    Subspace line(current.dim());
    if (!abelian) {
      line = find_isotropic_central_line(current, choice);
    } else {
      auto v = find_isotropic_vector(current, Subspace::full(current.dim()), choice);
      if (!v) break;  // anisotropic over Q
      line = Subspace::span(current.dim(), {*v});
    }
    chain.steps.push_back(reduce_once(current, line));
    current = chain.steps.back().quotient;
  }
  const auto sig = signature(current);
  chain.terminal_abelian = current.algebra().is_abelian();
  chain.terminal_positive_definite = sig.minus == 0 && sig.null == 0;
  chain.terminal = std::move(current);
  return chain;
}

std::vector<Matrix> skew_derivations(const MetricLieAlgebra& m) {
  const auto& g = m.algebra();
  const Matrix& gram = m.gram();
  const std::size_t n = g.dim();
  const std::size_t unknowns = n * n;  // d(r, c) at r * n + c
  std::vector<Vector> rows;
  // d[e_i, e_j] - [d e_i, e_j] - [e_i, d e_j] = 0, component l
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vector row = zero_vector(unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          if (const auto& c = g.structure_constant(i, j, k); c != 0) row[l * n + k] += c;
          if (const auto& c = g.structure_constant(k, j, l); c != 0) row[k * n + i] -= c;
          if (const auto& c = g.structure_constant(i, k, l); c != 0) row[k * n + j] -= c;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  // (d^T G + G d)(i, j) = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector row = zero_vector(unknowns);
      for (std::size_t k = 0; k < n; ++k) {
        if (gram(k, j) != 0) row[k * n + i] += gram(k, j);
        if (gram(i, k) != 0) row[k * n + j] += gram(i, k);
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  const Matrix basis = kernel(Matrix::from_rows(unknowns, rows));
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = basis(r * n + c, b);
    out.push_back(std::move(d));
  }
  return out;
}

MetricLieAlgebra double_extension(const MetricLieAlgebra& base, const Matrix& d, std::string derivation_name,
                                  std::string central_name) {
  const auto& g = base.algebra();
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw Error(ErrorCode::DimensionMismatch, "double_extension: derivation shape");
  if (!is_skew(d, base.gram())) throw Error(ErrorCode::NotSkew, "double_extension: derivation is not skew");
  if (!is_derivation(g, d)) throw Error(ErrorCode::NotDerivation, "double_extension: map is not a derivation");
  if (!is_invariant(base)) throw Error(ErrorCode::NotInvariant, "double_extension: base form is not invariant");

  std::vector<std::string> names = g.basis_names();
  if (derivation_name.empty()) derivation_name = fresh_name(names, "A");
  names.push_back(derivation_name);
  if (central_name.empty()) central_name = fresh_name(names, "Z");
  names.pop_back();

  std::vector<std::string> out_names;
  out_names.push_back(derivation_name);
  out_names.insert(out_names.end(), names.begin(), names.end());
  out_names.push_back(central_name);

  const std::size_t z = n + 1;
  const Matrix pairing = d.transpose() * base.gram();  // (i, j) -> <d e_i, e_j>
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (d(k, i) != 0) entries.push_back({0, i + 1, k + 1, d(k, i)});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        if (const auto& c = g.structure_constant(i, j, k); c != 0) entries.push_back({i + 1, j + 1, k + 1, c});
      if (pairing(i, j) != 0) entries.push_back({i + 1, j + 1, z, pairing(i, j)});
    }
  Matrix gram(n + 2, n + 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) gram(r + 1, c + 1) = base.gram()(r, c);
  gram(0, z) = 1;
  gram(z, 0) = 1;
  return MetricLieAlgebra(LieAlgebra(std::move(out_names), entries), BilinearForm(std::move(gram)));
}

}  // namespace metlie
