#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

Matrix evaluate(const Polynomial& p, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    out = out * a;
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += c[k];
  }
  return out;
}

std::vector<Vector> naive_kernel(const Matrix& m) {
  const Matrix r = naive_rref(m);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t row = 0; row < r.rows(); ++row)
    for (std::size_t c = 0; c < r.cols(); ++c)
      if (r(row, c) != 0) {
        pivots.push_back(c);
        is_pivot[c] = true;
        break;
      }
  std::vector<Vector> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, free);
    out.push_back(std::move(v));
  }
  return out;
}

using IntMatrix = std::vector<mpz_class>;

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t n) {
  IntMatrix c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[k * n + j] != 0) c[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return c;
}

mpz_class trace(const IntMatrix& a, std::size_t n) {
  mpz_class t = 0;
  for (std::size_t i = 0; i < n; ++i) t += a[i * n + i];
  return t;
}

bool all_zero(const IntMatrix& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

}  // namespace

Matrix naive_rref(const Matrix& m) {
  Matrix r = m;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
    std::size_t p = row;
    while (p < r.rows() && r(p, c) == 0) ++p;
    if (p == r.rows()) continue;
    r.swap_rows(p, row);
    const Rational inv = 1 / r(row, c);
    for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, c) == 0) continue;
      const Rational f = r(i, c);
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    ++row;
  }
  return r;
}

std::size_t naive_rank(const Matrix& m) {
  const Matrix r = naive_rref(m);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < r.cols(); ++j) nonzero = nonzero || r(i, j) != 0;
    rank += nonzero;
  }
  return rank;
}

Rational naive_det(const Matrix& m) {
  Matrix r = m;
  Rational det = 1;
  const std::size_t n = r.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && r(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      r.swap_rows(p, c);
      det = -det;
    }
    det *= r(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (r(i, c) == 0) continue;
      const Rational f = r(i, c) / r(c, c);
      for (std::size_t j = c; j < n; ++j) r(i, j) -= f * r(c, j);
    }
  }
  return det;
}

Matrix naive_inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  const Matrix r = naive_rref(Matrix::hcat(m, Matrix::identity(n)));
  for (std::size_t i = 0; i < n; ++i)
    if (r(i, i) != 1) throw std::runtime_error("naive_inverse: singular matrix");
  return r.column_block(n, n);
}

Polynomial charpoly_by_interpolation(const Matrix& a) {
  const std::size_t n = a.rows();
  Polynomial result;
  for (std::size_t t = 0; t <= n; ++t) {
    Matrix shifted = Matrix::identity(n);
    shifted *= Rational(static_cast<long>(t));
    shifted -= a;
    Polynomial basis = Polynomial::constant(naive_det(shifted));
    for (std::size_t s = 0; s <= n; ++s) {
      if (s == t) continue;
      const Rational denom = Rational(static_cast<long>(t)) - Rational(static_cast<long>(s));
      basis = basis * Polynomial{Rational(-static_cast<long>(s)) / denom, Rational(1) / denom};
    }
    result += basis;
  }
  return result;
}

std::pair<Matrix, Matrix> jordan_by_matrix_newton(const Matrix& a) {
  const Polynomial f = metlie::squarefree_part(charpoly_by_interpolation(a));
  const Polynomial df = f.derivative();
  Matrix s = a;
  for (int iter = 0; iter < 64; ++iter) {
    const Matrix fs = evaluate(f, s);
    if (fs.is_zero()) return {s, a - s};
    s = s - fs * naive_inverse(evaluate(df, s));
  }
  throw std::runtime_error("jordan_by_matrix_newton: no convergence");
}

bool is_nilpotent(const Matrix& a) { return a.rows() == 0 || a.power(a.rows()).is_zero(); }

Matrix random_structured_matrix(metlie::SampleRng& rng, std::size_t n) {
  Matrix core(n, n);
  std::size_t i = 0;
  while (i < n) {
    const auto kind = rng.uniform(0, 3);
    if (kind == 0 && i + 2 <= n) {
      // Rotation-type block, irreducible over Q, repeated with coupling when
      // there is room.
      const Rational a(static_cast<long>(rng.uniform(-2, 2)));
      const Rational b(static_cast<long>(rng.uniform(1, 2)));
      const std::size_t copies = (i + 4 <= n && rng.uniform(0, 1) == 1) ? 2 : 1;
      for (std::size_t c = 0; c < copies; ++c) {
        const std::size_t o = i + 2 * c;
        core(o, o) = a;
        core(o + 1, o + 1) = a;
        core(o, o + 1) = -b;
        core(o + 1, o) = b;
        if (c > 0) {
          core(o - 2, o) = 1;
          core(o - 1, o + 1) = 1;
        }
      }
      i += 2 * copies;
    } else {
      const Rational lambda(static_cast<long>(rng.uniform(-2, 2)));
      const std::size_t size = std::min<std::size_t>(n - i, static_cast<std::size_t>(rng.uniform(1, 3)));
      for (std::size_t k = 0; k < size; ++k) {
        core(i + k, i + k) = lambda;
        if (k > 0) core(i + k - 1, i + k) = 1;
      }
      i += size;
    }
  }
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      lower(r, c) = Rational(static_cast<long>(rng.uniform(-1, 1)));
      upper(c, r) = Rational(static_cast<long>(rng.uniform(-1, 1)));
    }
  const Matrix u = lower * upper;
  return u * core * naive_inverse(u);
}

metlie::SkewPairingModule random_skew_pairing(metlie::SampleRng& rng) {
  metlie::SkewPairingModule sp;
  sp.abelian_dim = static_cast<std::size_t>(rng.uniform(1, 3));
  sp.module_dim = static_cast<std::size_t>(rng.uniform(1, 5));
  const std::size_t k = sp.abelian_dim, m = sp.module_dim;

  Matrix base(m, m);
  const bool triangular = rng.uniform(0, 1) == 1;
  if (!triangular) {
    base = random_structured_matrix(rng, m);
  } else {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = r + 1; c < m; ++c) base(r, c) = Rational(static_cast<long>(rng.uniform(-2, 2)));
  }
  const Matrix base2 = base * base;
  for (std::size_t i = 0; i < k; ++i) {
    Matrix rho = Matrix::identity(m);
    rho *= Rational(triangular ? 0L : static_cast<long>(rng.uniform(-1, 1)));
    Matrix t1 = base, t2 = base2;
    t1 *= Rational(static_cast<long>(rng.uniform(-1, 1)));
    t2 *= Rational(static_cast<long>(rng.uniform(-1, 1)));
    rho += t1;
    rho += t2;
    sp.rho.push_back(std::move(rho));
  }

  // Unknown P(i, B) at index i * k + B.
  std::vector<Vector> rows;
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b) {
        Vector row(m * k, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
          row[i * k + b] += sp.rho[a](i, v);
          row[i * k + a] += sp.rho[b](i, v);
        }
        rows.push_back(std::move(row));
      }
  const auto kernel = naive_kernel(Matrix::from_rows(m * k, rows));
  sp.pairing = Matrix(m, k);
  for (const auto& basis : kernel) {
    const Rational c(static_cast<long>(rng.uniform(-2, 2)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t b = 0; b < k; ++b) sp.pairing(i, b) += c * basis[i * k + b];
  }
  return sp;
}

std::vector<Vector> nilpotent_grid_points(const metlie::LieAlgebra& g, std::size_t max_support) {
  const std::size_t n = g.dim();
  mpz_class scale = 1;
  for (const auto& e : g.brackets()) scale = lcm(scale, mpz_class(e.c.get_den()));
  // Scaled integer structure constants c(i, j, k) * scale.
  std::vector<mpz_class> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational v = g.structure_constant(i, j, k) * scale;
        c[(i * n + j) * n + k] = v.get_num();
      }

  std::vector<Vector> out;
  std::vector<int> x(n, 0);
  auto test = [&] {
    IntMatrix a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) a[k * n + j] += x[i] * c[(i * n + j) * n + k];
    }
    // tr(a^k) = 0 for k = 1..n characterises nilpotency in characteristic 0.
    IntMatrix p = a;
    for (std::size_t step = 1; step <= n && !all_zero(p); ++step) {
      if (trace(p, n) != 0) return;
      p = multiply(p, a, n);
    }
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(x[i]);
    out.push_back(std::move(v));
  };
  // Depth-first over coordinates with a budget of nonzero entries.
  const std::size_t start = std::min(max_support, n);
  auto visit = [&](auto&& self, std::size_t pos, std::size_t budget) -> void {
    if (pos == n) {
      if (budget < start) test();
      return;
    }
    x[pos] = 0;
    self(self, pos + 1, budget);
    if (budget == 0) return;
    for (int v : {-2, -1, 1, 2}) {
      x[pos] = v;
      self(self, pos + 1, budget - 1);
    }
    x[pos] = 0;
  };
  visit(visit, 0, start);
  return out;
}

}  // namespace oracle
