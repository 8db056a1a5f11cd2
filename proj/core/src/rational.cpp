#include "coopx/rational.hpp"

#include <cctype>

#include "coopx/error.hpp"

namespace coopx {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedSystem: return "MalformedSystem";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::InvalidGame: return "InvalidGame";
    case ErrorCode::OverlapAmbiguity: return "OverlapAmbiguity";
    case ErrorCode::NotClosedManifold: return "NotClosedManifold";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::BoundaryTouchesBalanced: return "BoundaryTouchesBalanced";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::NotSphere: return "NotSphere";
    case ErrorCode::CoboundaryUnsolvable: return "CoboundaryUnsolvable";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::MalformedInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::MalformedInput, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num[0] == '+' ? num.substr(1) : num)};
  mpz_class d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int sign(const Rational& q) { return sgn(q); }

Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

Vector ones(std::size_t n) { return Vector(n, Rational(1)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e = zeros(n);
  e.at(i) = 1;
  return e;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of vectors with different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational sum(const Vector& a) {
  Rational s = 0;
  for (const auto& x : a) s += x;
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum of different lengths");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference of different lengths");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vector scale(const Vector& a, const Rational& s) {
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return c;
}

Vector shift(const Vector& a, const Rational& s) {
  Vector c(a);
  for (auto& x : c) x += s;
  return c;
}

bool is_zero(const Vector& a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

bool leq(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "comparison of vectors with different lengths");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace coopx
