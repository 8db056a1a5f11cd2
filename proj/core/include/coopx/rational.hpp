#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace coopx {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) as long as every constructor goes through
/// make_rational / parse_rational.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "-p", "p/q". Throws Error(MalformedInput) otherwise.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

int sign(const Rational& q);

Vector zeros(std::size_t n);
Vector ones(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

Rational dot(const Vector& a, const Vector& b);
Rational sum(const Vector& a);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Rational& s);
/// a + s * 1
Vector shift(const Vector& a, const Rational& s);
bool is_zero(const Vector& a);
/// Componentwise a <= b.
bool leq(const Vector& a, const Vector& b);

std::string to_string(const Vector& v);

}  // namespace coopx
