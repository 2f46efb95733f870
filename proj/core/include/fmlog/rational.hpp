#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fmlog {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row-major

/// Lossless "p/q" form (the denominator is always written, "3/1" for 3).
std::string to_string(const Rational& value);

/// Accepts "p/q", "p" and "-p/q". Throws InvalidInput on anything else.
Rational parse_rational(std::string_view text);

Rational l1_norm(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

Matrix identity_matrix(int n);
Matrix multiply(const Matrix& a, const Matrix& b);
Vec apply(const Matrix& m, const Vec& v);
Matrix transpose(const Matrix& m);
/// Exact inverse by Gauss-Jordan elimination; throws InvalidInput when singular.
Matrix inverse(const Matrix& m);
bool is_orthogonal(const Matrix& m);

}  // namespace fmlog
