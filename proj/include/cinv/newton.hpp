#pragma once

#include <span>
#include <vector>

#include "cinv/bigint.hpp"

namespace cinv {

/// Evaluates g_k, the integer polynomial with g_k(p_1..p_k) = k! e_k when the
/// p_i are power sums and e_k the k-th elementary symmetric function.
///
/// Uses the Newton identity scaled by (k-1)!:
///   g_k = sum_{i=1..k} (-1)^(i-1) (k-1)!/(k-i)! * args[i-1] * g_{k-i},  g_0 = 1.
/// Throws InvalidInput unless k >= 1 and args.size() == k.
BigInt newton_g(unsigned k, std::span<const BigInt> args);

/// g_1..g_k in one pass (result[m-1] == g_m); the recursion produces them all anyway.
std::vector<BigInt> newton_g_sequence(unsigned k, std::span<const BigInt> args);

}  // namespace cinv
