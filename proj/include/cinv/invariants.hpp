#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cinv/bigint.hpp"
#include "cinv/multidegree.hpp"

namespace cinv {

/// Exact invariants of X_n(d). Chern and Pontrjagin entries are the integer
/// coefficients of x^k and x^{2k}, x the restricted hyperplane class.
struct InvariantProfile {
  unsigned n = 0;
  std::size_t r = 0;
  BigInt d;
  std::vector<BigInt> c;  // c[k-1] = c_k, k = 1..n
  std::vector<BigInt> p;  // p[k-1] = p_k, k = 1..n/2
  BigInt e;

  const BigInt& c1() const { return c.front(); }
  /// d * p_1; the composite compared in complex dimension 2.
  BigInt d_times_p1() const { return p.empty() ? BigInt(0) : d * p.front(); }
  /// e / d = c_n.
  const BigInt& euler_over_degree() const { return c.back(); }

  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

BigInt chern_coefficient(unsigned n, const Multidegree& md, unsigned k);
BigInt pontrjagin_coefficient(unsigned n, const Multidegree& md, unsigned k);
BigInt euler_characteristic(unsigned n, const Multidegree& md);

/// Requires n >= 2.
InvariantProfile profile(unsigned n, const Multidegree& md);

/// Same formulas driven directly by (r, d, s_1..s_n). `sums` may be longer than n.
/// This is the path used when degree-1 entries are intentionally kept.
InvariantProfile profile_from_power_sums(unsigned n, std::size_t r, const BigInt& d,
                                         std::span<const BigInt> sums);

/// Flat JSON object, every integer as a decimal string.
std::string profile_to_machine(const InvariantProfile& prof);
InvariantProfile profile_from_machine(std::string_view text);

std::string profile_to_text(const InvariantProfile& prof, const Multidegree& md);

}  // namespace cinv
