#include "metlie/linalg.hpp"

#include <algorithm>

#include "metlie/error.hpp"

namespace metlie {

namespace {

using IntRow = std::vector<Integer>;

std::size_t bit_length(const Integer& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

IntRow integral_row(const Matrix& m, std::size_t r) {
  Integer common = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& x = m(r, c);
    if (x != 0) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den_mpz_t());
  }
  IntRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& x = m(r, c);
    row[c] = x.get_num() * (common / x.get_den());
  }
  return row;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<IntRow> a(rows);
  for (std::size_t r = 0; r < rows; ++r) a[r] = integral_row(m, r);

  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::size_t bits = bit_length(a[i][c]);
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    const Integer p = a[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Integer factor = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        // a_ij <- (p * a_ij - a_ic * a_rj) / prev, exact by Sylvester's identity.
        tmp = p * a[i][j];
        if (factor != 0 && a[r][j] != 0) tmp -= factor * a[r][j];
        if (prev != 1) mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = tmp;
      }
    }
    prev = p;
    pivots.push_back(c);
    ++r;
  }

  Matrix out(rows, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Integer& pv = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      Rational q(a[i][j], pv);
      q.canonicalize();
      out(i, j) = q;
    }
  }
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(n, basis);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  const auto [reduced, pivots] = rref(Matrix::hcat(m, Matrix::identity(n)));
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw Error(ErrorCode::DegenerateForm, "inverse of singular matrix");
  return reduced.column_block(n, n);
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial::constant(1);
  std::vector<Vector> powers;  // vec(m^k) as columns
  Matrix current = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const Vector flat = current.data();
    if (!powers.empty()) {
      if (auto c = solve(Matrix::from_columns(n * n, powers), flat)) {
        std::vector<Rational> coeffs(k + 1);
        for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*c)[i];
        coeffs[k] = 1;
        return Polynomial(std::move(coeffs));
      }
    }
    powers.push_back(flat);
    current = current * m;
  }
  throw std::logic_error("minimal polynomial: no dependency up to degree n");
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t top = col + 1;
    std::size_t best = n;
    for (std::size_t i = top; i < n; ++i) {
      if (h(i, col) == 0) continue;
      if (best == n || bit_cost(h(i, col)) < bit_cost(h(best, col))) best = i;
    }
    if (best == n) continue;
    if (best != top) {
      h.swap_rows(best, top);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, best), h(r, top));
    }
    const Rational t = h(top, col);
    for (std::size_t i = top + 1; i < n; ++i) {
      if (h(i, col) == 0) continue;
      const Rational u = h(i, col) / t;
      for (std::size_t c = 0; c < n; ++c)
        if (h(top, c) != 0) h(i, c) -= u * h(top, c);
      for (std::size_t r = 0; r < n; ++r)
        if (h(r, i) != 0) h(r, top) += u * h(r, i);
    }
  }
  // p_k = char poly of the leading k x k block.
  std::vector<Polynomial> p;
  p.reserve(n + 1);
  p.push_back(Polynomial::constant(1));
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next = Polynomial({-h(k - 1, k - 1), Rational(1)}) * p[k - 1];
    Rational t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t == 0) break;
      const Rational coeff = t * h(k - i - 1, k - 1);
      if (coeff != 0) next -= coeff * p[k - i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

JordanPair jordan_chevalley(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "Jordan decomposition of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {m, m, Polynomial(), Polynomial()};

  const Polynomial chi = characteristic_polynomial(m);
  const Polynomial f = squarefree_part(chi);
  const Polynomial df = f.derivative();
  Polynomial s = Polynomial::x() % chi;
  for (;;) {
    const Polynomial fs = compose_mod(f, s, chi);
    if (fs.is_zero()) break;
    const Polynomial dfs = compose_mod(df, s, chi);
    s = (s - fs * inverse_mod(dfs, chi)) % chi;
  }
  Polynomial p = s;
  const Rational chi0 = chi.coefficient(0);
  if (chi0 != 0) {
    p -= (p.coefficient(0) / chi0) * chi;
  } else if (p.coefficient(0) != 0) {
    throw std::logic_error("Jordan decomposition: semisimple polynomial has a constant term");
  }
  JordanPair out;
  out.semisimple = p(m);
  out.nilpotent = m - out.semisimple;
  out.q_poly = Polynomial::x() - p;
  out.p_poly = std::move(p);
  return out;
}

CongruenceDiagonalization congruence_diagonalize(const Matrix& g) {
  if (!g.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "congruence_diagonalize: matrix is not symmetric");
  const std::size_t n = g.rows();
  Matrix h = g;
  Matrix s = Matrix::identity(n);

  auto swap_basis = [&](std::size_t a, std::size_t b) {
    h.swap_rows(a, b);
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(h(r, a), h(r, b));
      std::swap(s(r, a), s(r, b));
    }
  };
  // e_target <- e_target + c * e_source
  auto add_basis = [&](std::size_t target, std::size_t source, const Rational& c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (h(r, source) != 0) h(r, target) += c * h(r, source);
      if (s(r, source) != 0) s(r, target) += c * s(r, source);
    }
    for (std::size_t col = 0; col < n; ++col)
      if (h(source, col) != 0) h(target, col) += c * h(source, col);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (h(k, k) == 0) {
      std::size_t diag = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (h(i, i) != 0 && (diag == n || bit_cost(h(i, i)) < bit_cost(h(diag, diag)))) diag = i;
      if (diag != n) {
        swap_basis(k, diag);
      } else {
        std::size_t partner = n;
        for (std::size_t j = k + 1; j < n && partner == n; ++j)
          if (h(k, j) != 0) partner = j;
        if (partner == n) continue;  // null direction within the remaining block
        add_basis(k, partner, Rational(1));
      }
    }
    const Rational pivot = h(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (h(k, j) == 0) continue;
      add_basis(j, k, -h(k, j) / pivot);
    }
  }
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = h(i, i);
  return {std::move(s), std::move(d)};
}

Signature signature_of(const Matrix& symmetric) {
  Signature sig;
  for (const auto& x : congruence_diagonalize(symmetric).diagonal) {
    if (x > 0) ++sig.plus;
    else if (x < 0) ++sig.minus;
    else ++sig.null;
  }
  return sig;
}

}  // namespace metlie
