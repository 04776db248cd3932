#include "cinv/newton.hpp"

#include <string>
#include <vector>

namespace cinv {

std::vector<BigInt> newton_g_sequence(unsigned k, std::span<const BigInt> args) {
  if (k == 0) throw InvalidInput("newton_g: k must be at least 1");
  if (args.size() != k) {
    throw InvalidInput("newton_g: expected " + std::to_string(k) + " arguments, got " +
                       std::to_string(args.size()));
  }
  std::vector<BigInt> g(k + 1);
  g[0] = 1;
  for (unsigned m = 1; m <= k; ++m) {
    // falling = (m-1)!/(m-i)!, grown one factor per step in i.
    BigInt acc = 0;
    BigInt falling = 1;
    for (unsigned i = 1; i <= m; ++i) {
      if (i > 1) falling *= (m - i + 1);
      BigInt term = falling * args[i - 1] * g[m - i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    g[m] = std::move(acc);
  }
  g.erase(g.begin());
  return g;
}

BigInt newton_g(unsigned k, std::span<const BigInt> args) {
  return std::move(newton_g_sequence(k, args).back());
}

}  // namespace cinv
