#include "metlie/rational.hpp"

#include <cctype>

#include "metlie/error.hpp"

namespace metlie {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::InvalidBracket: return "InvalidBracket";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::NonSolvable: return "NonSolvable";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::Abelian: return "Abelian";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::NotDerivation: return "NotDerivation";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotNilInvariant: return "NotNilInvariant";
    case ErrorCode::NoRationalIsotropicVector: return "NoRationalIsotropicVector";
    case ErrorCode::InvalidPairing: return "InvalidPairing";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = strip(text);
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  if (!is_integer_literal(num))
    throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(text) + "\"");
  Rational r(parse_integer(num));
  if (slash != std::string_view::npos) {
    const auto den = s.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
      throw Error(ErrorCode::ParseError, "not a rational: \"" + std::string(text) + "\"");
    Integer d = parse_integer(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: \"" + std::string(text) + "\"");
    r = Rational(r.get_num(), d);
    r.canonicalize();
  }
  return r;
}

std::size_t bit_cost(const Rational& r) {
  if (r == 0) return 0;
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum: size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference: size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot: size mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

}  // namespace metlie
