#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cinv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Malformed user input: bad degrees, out-of-range dimension, flag conflicts.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exactness assertion failed. Always a bug in this library, never bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(const BigRat& v);

/// Parses an optionally signed base-10 integer. Throws InvalidInput on anything else.
BigInt parse_decimal(std::string_view text);

BigInt factorial(unsigned k);

/// Returns a / b, throwing InternalError when b does not divide a.
BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what);

}  // namespace cinv
