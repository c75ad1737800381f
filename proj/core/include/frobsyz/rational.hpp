#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace frobsyz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "7/4", "6", "-1/3": lowest terms, denominator omitted when 1.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);
/// Inverse of to_string; throws InvalidArgument on malformed input.
Rational parse_rational(const std::string& text);

BigInt big_pow(std::uint64_t base, unsigned exponent);

}  // namespace frobsyz
