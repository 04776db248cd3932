#include "cinv/factorization.hpp"

#include <charconv>
#include <sstream>

namespace cinv {

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t q = 3; q * q <= v; q += 2) {
    if (v % q == 0) return false;
  }
  return true;
}

Factorization::Factorization(std::initializer_list<std::pair<const std::uint64_t, unsigned>> init) {
  for (const auto& [p, e] : init) add(p, e);
}

void Factorization::add(std::uint64_t p, unsigned exp) {
  if (!is_prime(p)) throw InvalidInput("not a prime: " + std::to_string(p));
  if (exp == 0) return;
  exponents_[p] += exp;
}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : exponents_) v *= boost::multiprecision::pow(BigInt(p), e);
  return v;
}

std::string Factorization::to_string() const {
  if (exponents_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : exponents_) {
    if (!first) out << '*';
    first = false;
    out << p;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

Factorization factorize(std::int64_t v) {
  if (v <= 0) throw InvalidInput("factorize: value must be positive, got " + std::to_string(v));
  if (static_cast<std::uint64_t>(v) > kMaxFactorizable) {
    throw InvalidInput("factorize: " + std::to_string(v) + " exceeds the supported bound " +
                       std::to_string(kMaxFactorizable));
  }
  Factorization f;
  auto rest = static_cast<std::uint64_t>(v);
  for (std::uint64_t q = 2; q * q <= rest; q += (q == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e > 0) f.add(q, e);
  }
  if (rest > 1) f.add(rest, 1);
  return f;
}

Factorization merge_factorizations(std::span<const Factorization> fs) {
  Factorization out;
  for (const auto& f : fs) {
    for (const auto& [p, e] : f.exponents()) out.add(p, e);
  }
  return out;
}

unsigned padic_valuation(const Factorization& f, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("padic_valuation: not a prime: " + std::to_string(p));
  const auto it = f.exponents().find(p);
  return it == f.exponents().end() ? 0U : it->second;
}

namespace {

template <typename T>
T parse_unsigned(std::string_view s, std::string_view whole) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidInput("malformed factorization: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Factorization parse_factorization(std::string_view text) {
  Factorization f;
  if (text == "1") return f;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t star = text.find('*', start);
    const std::string_view term =
        text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    const std::size_t caret = term.find('^');
    const auto p = parse_unsigned<std::uint64_t>(term.substr(0, caret), text);
    const unsigned e =
        caret == std::string_view::npos ? 1U : parse_unsigned<unsigned>(term.substr(caret + 1), text);
    if (e == 0) throw InvalidInput("malformed factorization: '" + std::string(text) + "'");
    f.add(p, e);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return f;
}

}  // namespace cinv
