#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace vee {

// GMP keeps mpq_class canonical after every arithmetic operation, so equality
// of Rational values is equality of numbers.
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

Rational make_rational(long num, long den = 1);

/// Parses `[-]digits[/digits]`. Throws VeeError(ParseError) on anything else
/// or on a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double x, long max_den);

Integer lcm_of_denominators(const RatVector& v);

bool is_zero(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

/// True when a and b are linearly dependent.
bool parallel(const RatVector& a, const RatVector& b);

/// If d = k*a for a rational k, returns k; a must be nonzero.
bool multiple_of(const RatVector& d, const RatVector& a, Rational* k);

RatVector operator-(const RatVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);

}  // namespace vee
