#include "cinv/bigint.hpp"

#include <cctype>

namespace cinv {

std::string to_decimal(const BigRat& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw InvalidInput("not an integer: '" + std::string(text) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const unsigned char ch = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(ch)) throw InvalidInput("not an integer: '" + std::string(text) + "'");
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt exact_div(const BigInt& a, const BigInt& b, std::string_view what) {
  BigInt q;
  BigInt rem;
  boost::multiprecision::divide_qr(a, b, q, rem);
  if (rem != 0) {
    throw InternalError(std::string(what) + ": " + a.str() + " is not divisible by " + b.str());
  }
  return q;
}

}  // namespace cinv
