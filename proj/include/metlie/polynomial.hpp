#pragma once

#include <string>
#include <utility>
#include <vector>

#include "metlie/matrix.hpp"
#include "metlie/rational.hpp"

namespace metlie {

/// Univariate rational polynomial, coefficients in ascending degree order
/// (coeffs[i] multiplies x^i). The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial x();

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const;
  Rational leading() const;

  Polynomial derivative() const;
  Polynomial monic() const;

  Rational operator()(const Rational& at) const;
  /// Horner evaluation at a square matrix.
  Matrix operator()(const Matrix& at) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

/// p(q(x)) mod m.
Polynomial compose_mod(const Polynomial& p, const Polynomial& q, const Polynomial& m);

bool is_squarefree(const Polynomial& p);

/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

std::string to_string(const Polynomial& p);

}  // namespace metlie
