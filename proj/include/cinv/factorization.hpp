#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "cinv/bigint.hpp"

namespace cinv {

/// Prime -> exponent map. Every key is prime and every exponent is at least 1.
class Factorization {
public:
  Factorization() = default;
  Factorization(std::initializer_list<std::pair<const std::uint64_t, unsigned>> init);

  const std::map<std::uint64_t, unsigned>& exponents() const noexcept { return exponents_; }
  bool empty() const noexcept { return exponents_.empty(); }

  /// Multiplies in p^exp. p must be prime; exp == 0 is a no-op.
  void add(std::uint64_t p, unsigned exp);

  BigInt value() const;

  /// "2^19*3^5*19"; the empty factorization renders as "1".
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

private:
  std::map<std::uint64_t, unsigned> exponents_;
};

inline constexpr std::uint64_t kMaxFactorizable = 1'000'000;

bool is_prime(std::uint64_t v) noexcept;

/// Trial division. Accepts 1 <= v <= kMaxFactorizable.
Factorization factorize(std::int64_t v);

Factorization merge_factorizations(std::span<const Factorization> fs);

/// Exponent of p in f; p must be prime.
unsigned padic_valuation(const Factorization& f, std::uint64_t p);

/// Parses the to_string() rendering back. Used by the corpus reader.
Factorization parse_factorization(std::string_view text);

}  // namespace cinv
