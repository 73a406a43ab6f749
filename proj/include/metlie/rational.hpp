#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace metlie {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, and zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

using Vector = std::vector<Rational>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q" with optional surrounding whitespace.
/// Throws Error(ParseError) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// Bit length of |numerator| * denominator; the pivoting cost used by the
/// elimination routines.
std::size_t bit_cost(const Rational& r);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

}  // namespace metlie
