#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cinv/bigint.hpp"
#include "cinv/factorization.hpp"

namespace cinv {

using Degree = std::int64_t;

/// Canonical multidegree: non-increasing, every entry >= 2. The empty
/// multidegree stands for projective space itself.
class Multidegree {
public:
  Multidegree() = default;

  /// Caller guarantees the canonical form; checked in debug builds only.
  static Multidegree from_canonical(std::vector<Degree> degrees);

  std::span<const Degree> degrees() const noexcept { return degrees_; }
  std::size_t codim() const noexcept { return degrees_.size(); }
  bool empty() const noexcept { return degrees_.empty(); }

  /// "(6,5,3)"
  std::string to_string() const;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree& a, const Multidegree& b) {
    return a.degrees_ <=> b.degrees_;
  }

private:
  explicit Multidegree(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {}
  std::vector<Degree> degrees_;
};

/// Sorts non-increasing and strips entries equal to 1. Entries <= 0 throw InvalidInput.
Multidegree canonicalize(std::span<const Degree> raw);

/// Parses "6,5,3" (whitespace tolerated) and canonicalizes.
Multidegree parse_multidegree(std::string_view text);

BigInt total_degree(const Multidegree& md);

/// s_i = sum_j d_j^i for i = 1..m, returned 0-based (result[i-1] == s_i).
std::vector<BigInt> power_sums(std::span<const Degree> degrees, unsigned m);
inline std::vector<BigInt> power_sums(const Multidegree& md, unsigned m) {
  return power_sums(md.degrees(), m);
}

/// Factorization of the total degree assembled from per-degree factorizations.
Factorization factorize_multidegree(const Multidegree& md);

}  // namespace cinv
