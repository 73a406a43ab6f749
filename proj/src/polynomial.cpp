#include "metlie/polynomial.hpp"

#include <sstream>

#include "metlie/error.hpp"

namespace metlie {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * coeffs_[i]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  return inv * (*this);
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Matrix Polynomial::operator()(const Matrix& at) const {
  if (!at.is_square()) throw Error(ErrorCode::NonSquare, "polynomial evaluated at non-square matrix");
  const std::size_t n = at.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at;
    if (*it != 0)
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c(p.coeffs_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  Polynomial r0 = m, r1 = a % m;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw std::domain_error("polynomial is not invertible modulo m");
  return ((1 / r0.leading()) * t0) % m;
}

Polynomial compose_mod(const Polynomial& p, const Polynomial& q, const Polynomial& m) {
  Polynomial acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * q + Polynomial::constant(*it)) % m;
  return acc;
}

bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const Rational a = abs(c);
    if (a != 1 || i == 0) os << to_string(a);
    if (i > 0) os << (a != 1 ? "*x" : "x");
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

}  // namespace metlie
