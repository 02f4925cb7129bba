#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace homgeo {

// Expression templates are off so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Largest r with r*r <= n. Throws DomainError for negative n.
Integer isqrt_floor(const Integer& n);

/// True iff n >= 0 and n is the square of an integer.
bool is_perfect_square(const Integer& n);

/// Integer power with a small nonnegative exponent.
Integer ipow(const Integer& base, unsigned exponent);

Integer gcd(const Integer& a, const Integer& b);

std::string to_string(const Integer& n);

/// Parses an optionally signed decimal literal; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

}  // namespace homgeo
