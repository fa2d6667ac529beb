#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tropsa {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

// Accepts "p/q", "-p/q" and bare integers. Anything else (decimals,
// exponents, zero denominators, stray whitespace) throws InvalidInput.
Rational parse_rational(std::string_view text);

// Canonical "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Rational make_rational(long num, long den = 1);

IntegerVector make_integer_vector(std::initializer_list<long> xs);
RationalVector to_rational(const IntegerVector& v);

bool is_zero(const IntegerVector& v);
bool is_zero(const RationalVector& v);

Integer gcd_of(const IntegerVector& v);

// Scales a nonzero rational vector to the primitive integer vector on the
// same ray (positive multiple).
IntegerVector primitive_on_ray(const RationalVector& v);

// As primitive_on_ray, then flips sign so the first nonzero entry is
// positive. Used for kernel bases and normals.
IntegerVector normalized_primitive(const RationalVector& v);

Rational dot(const IntegerVector& a, const IntegerVector& b);
Rational dot(const RationalVector& a, const IntegerVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

std::string to_string(const IntegerVector& v);
std::string to_string(const RationalVector& v);

} // namespace tropsa
