#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cinv/newton.hpp"

namespace cinv::oracle {

using boost::multiprecision::pow;

BigInt closed_form_g(unsigned k, std::span<const BigInt> s) {
  const BigInt s1 = s.size() > 0 ? s[0] : BigInt(0);
  const BigInt s2 = s.size() > 1 ? s[1] : BigInt(0);
  const BigInt s3 = s.size() > 2 ? s[2] : BigInt(0);
  const BigInt s4 = s.size() > 3 ? s[3] : BigInt(0);
  const BigInt s5 = s.size() > 4 ? s[4] : BigInt(0);
  const BigInt s6 = s.size() > 5 ? s[5] : BigInt(0);
  const BigInt s7 = s.size() > 6 ? s[6] : BigInt(0);
  switch (k) {
    case 1: return s1;
    case 2: return pow(s1, 2) - s2;
    case 3: return pow(s1, 3) - 3 * s1 * s2 + 2 * s3;
    case 4: return pow(s1, 4) - 6 * pow(s1, 2) * s2 + 8 * s1 * s3 + 3 * pow(s2, 2) - 6 * s4;
    case 5:
      return pow(s1, 5) - 10 * pow(s1, 3) * s2 + 20 * pow(s1, 2) * s3 - 30 * s1 * s4 +
             15 * s1 * pow(s2, 2) - 20 * s2 * s3 + 24 * s5;
    case 6:
      return pow(s1, 6) - 15 * pow(s1, 4) * s2 + 40 * pow(s1, 3) * s3 - 90 * pow(s1, 2) * s4 +
             45 * pow(s1, 2) * pow(s2, 2) - 120 * s1 * s2 * s3 + 144 * s1 * s5 - 15 * pow(s2, 3) +
             90 * s2 * s4 + 40 * pow(s3, 2) - 120 * s6;
    case 7:
      return pow(s1, 7) - 21 * pow(s1, 5) * s2 + 70 * pow(s1, 4) * s3 - 210 * pow(s1, 3) * s4 +
             105 * pow(s1, 3) * pow(s2, 2) - 420 * pow(s1, 2) * s2 * s3 + 504 * pow(s1, 2) * s5 -
             105 * s1 * pow(s2, 3) + 630 * s1 * s2 * s4 + 280 * s1 * pow(s3, 2) - 840 * s1 * s6 +
             210 * pow(s2, 2) * s3 - 504 * s2 * s5 - 420 * s3 * s4 + 720 * s7;
    default: throw std::out_of_range("closed_form_g: only k = 1..7 are printed");
  }
}

BigInt scaled_elementary(unsigned k, std::span<const BigInt> roots) {
  std::vector<BigInt> coeff(roots.size() + 1, BigInt(0));
  coeff[0] = 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j > 0; --j) coeff[j] += roots[i] * coeff[j - 1];
  }
  BigInt fact = 1;
  for (unsigned i = 2; i <= k; ++i) fact *= i;
  return k < coeff.size() ? fact * coeff[k] : BigInt(0);
}

BigInt binomial(unsigned j, unsigned k) {
  if (k > j) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= (j - i);
    den *= (i + 1);
  }
  return num / den;
}

namespace {

BigInt div_exact(const BigInt& a, long b) {
  if (a % b != 0) throw std::logic_error("printed formula: non-integral division");
  return a / b;
}

}  // namespace

PrintedInvariants printed_formulas(unsigned n, std::span<const Degree> degrees) {
  const long r = static_cast<long>(degrees.size());
  std::vector<BigInt> s(8, BigInt(0));
  for (const Degree v : degrees) {
    BigInt pw = 1;
    for (int i = 1; i <= 7; ++i) {
      pw *= v;
      s[i] += pw;
    }
  }
  PrintedInvariants out;
  out.d = 1;
  for (const Degree v : degrees) out.d *= v;

  const long base = static_cast<long>(n) + 1;  // 3 for surfaces, 4 for threefolds, ...
  auto A = [&](int i) { return BigInt(base + r) - s[i]; };
  out.c1 = A(1);
  out.p.push_back(A(2));
  if (n >= 4) out.p.push_back(div_exact(pow(A(2), 2) - A(4), 2));

  switch (n) {
    case 2: out.e = div_exact(out.d * (pow(A(1), 2) - A(2)), 2); break;
    case 3: out.e = div_exact(out.d * (pow(A(1), 3) - 3 * A(1) * A(2) + 2 * A(3)), 6); break;
    case 4:
      out.e = div_exact(out.d * (pow(A(1), 4) - 6 * pow(A(1), 2) * A(2) + 8 * A(1) * A(3) +
                                 3 * pow(A(2), 2) - 6 * A(4)),
                        24);
      break;
    case 5:
      out.e = div_exact(out.d * (pow(A(1), 5) - 10 * pow(A(1), 3) * A(2) + 20 * pow(A(1), 2) * A(3) -
                                 30 * A(1) * A(4) + 15 * A(1) * pow(A(2), 2) - 20 * A(2) * A(3) +
                                 24 * A(5)),
                        120);
      break;
    case 6:
    case 7: {
      std::vector<BigInt> a;
      for (unsigned i = 1; i <= n; ++i) a.push_back(A(static_cast<int>(i)));
      out.e = div_exact(out.d * closed_form_g(n, a), n == 6 ? 720 : 5040);
      break;
    }
    default: throw std::out_of_range("printed_formulas: n outside 2..7");
  }
  return out;
}

BigRat printed_p3_dim6(std::span<const Degree> degrees) {
  const long r = static_cast<long>(degrees.size());
  BigInt s1 = 0, s2 = 0, s3 = 0;
  for (const Degree v : degrees) {
    s1 += v;
    s2 += BigInt(v) * v;
    s3 += BigInt(v) * v * v;
  }
  const BigInt a1 = 7 + r - s1;
  const BigInt a2 = 7 + r - s2;
  const BigInt a3 = 7 + r - s3;
  return BigRat(pow(a1, 3) - 3 * a1 * a2 + 2 * a3, BigInt(6));
}

BigInt surface_hypersurface_euler(Degree d) {
  const BigInt b = d;
  return b * (b * b - 4 * b + 6);
}

std::set<std::vector<Degree>> brute_force_multisets(Degree max_degree, std::size_t max_codim) {
  std::set<std::vector<Degree>> out;
  for (std::size_t r = 1; r <= max_codim; ++r) {
    std::vector<Degree> t(r, 2);
    while (true) {
      std::vector<Degree> sorted = t;
      std::sort(sorted.begin(), sorted.end(), std::greater<>{});
      out.insert(sorted);
      std::size_t i = 0;
      while (i < r && t[i] == max_degree) t[i++] = 2;
      if (i == r) break;
      ++t[i];
    }
  }
  return out;
}

std::set<std::set<std::vector<Degree>>> brute_force_groups(unsigned n, Degree max_degree,
                                                           std::size_t max_codim) {
  const auto all = brute_force_multisets(max_degree, max_codim);
  std::vector<std::vector<Degree>> items(all.begin(), all.end());
  std::vector<InvariantProfile> profs;
  for (const auto& v : items) profs.push_back(profile(n, canonicalize(v)));

  auto same = [&](const InvariantProfile& a, const InvariantProfile& b) {
    if (n == 2) {
      return a.d * a.p[0] == b.d * b.p[0] && a.e == b.e && (a.c1() - b.c1()) % 2 == 0;
    }
    if (n == 3) return a.d == b.d && a.p[0] == b.p[0] && a.e == b.e;
    return a.d == b.d && a.p == b.p && a.e == b.e;
  };

  std::vector<std::size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      if (same(profs[i], profs[j])) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::set<std::vector<Degree>>> groups;
  for (std::size_t i = 0; i < items.size(); ++i) groups[find(i)].insert(items[i]);
  std::set<std::set<std::vector<Degree>>> out;
  for (auto& [root, g] : groups) {
    if (g.size() >= 2) out.insert(g);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(std::span<const BigInt> v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

std::string join(std::span<const Degree> v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ']';
  return out.str();
}

}  // namespace

std::optional<std::string> check_closed_forms(unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (unsigned t = 0; t < trials; ++t) {
    for (unsigned k = 1; k <= 7; ++k) {
      std::vector<BigInt> args;
      for (unsigned i = 0; i < k; ++i) args.emplace_back(entry(rng));
      const BigInt got = newton_g(k, args);
      const BigInt want = closed_form_g(k, args);
      if (got != want) {
        return "newton_g(" + std::to_string(k) + ", " + join(args) + ") = " + got.str() +
               ", closed form gives " + want.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_binomial_identity() {
  for (unsigned k = 1; k <= 7; ++k) {
    for (unsigned j = 0; j <= 12; ++j) {
      const std::vector<BigInt> args(k, BigInt(j));
      const BigInt want = factorial(k) * binomial(j, k);
      const BigInt got = newton_g(k, args);
      if (got != want) {
        return "newton_g(" + std::to_string(k) + ", [" + std::to_string(j) + "...]) = " + got.str() +
               ", expected " + want.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_elementary_identity(unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-20, 20);
  std::uniform_int_distribution<int> count(0, 9);
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<BigInt> roots;
    const int m = count(rng);
    for (int i = 0; i < m; ++i) roots.emplace_back(entry(rng));
    for (unsigned k = 1; k <= 9; ++k) {
      std::vector<BigInt> sums(k, BigInt(0));
      for (const auto& x : roots) {
        BigInt pw = 1;
        for (unsigned i = 0; i < k; ++i) {
          pw *= x;
          sums[i] += pw;
        }
      }
      if (newton_g(k, sums) != scaled_elementary(k, roots)) {
        return "k=" + std::to_string(k) + " roots " + join(roots) + ": newton_g disagrees with k! e_k";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_integrality() {
  const auto all = brute_force_multisets(9, 5);
  for (const auto& v : all) {
    const Multidegree md = canonicalize(v);
    for (unsigned n = 2; n <= 7; ++n) {
      try {
        (void)profile(n, md);
      } catch (const InternalError& ex) {
        return "n=" + std::to_string(n) + " " + md.to_string() + ": " + ex.what();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_padding_invariance(unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(1, 12);
  std::uniform_int_distribution<int> length(0, 7);
  std::uniform_int_distribution<int> ones(1, 4);
  std::uniform_int_distribution<unsigned> dim(2, 7);
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<Degree> raw;
    const int len = length(rng);
    for (int i = 0; i < len; ++i) raw.push_back(degree(rng));
    const int pad = ones(rng);
    for (int i = 0; i < pad; ++i) raw.insert(raw.begin() + static_cast<long>(rng() % (raw.size() + 1)), 1);
    const unsigned n = dim(rng);

    BigInt d = 1;
    for (const Degree v : raw) d *= v;
    const InvariantProfile kept = profile_from_power_sums(n, raw.size(), d, power_sums(raw, n));
    const InvariantProfile stripped = profile(n, canonicalize(raw));
    if (kept.d != stripped.d || kept.c != stripped.c || kept.p != stripped.p || kept.e != stripped.e) {
      return "n=" + std::to_string(n) + " raw " + join(raw) + ": padding with 1s changes the profile";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_projective_space() {
  for (unsigned n = 1; n <= 7; ++n) {
    const BigInt e = euler_characteristic(n, Multidegree{});
    if (e != n + 1) return "chi(CP^" + std::to_string(n) + ") = " + e.str();
    for (unsigned k = 1; k <= n; ++k) {
      if (chern_coefficient(n, Multidegree{}, k) != binomial(n + 1, k)) {
        return "c_" + std::to_string(k) + "(CP^" + std::to_string(n) + ") is not C(n+1,k)";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_hypersurface_euler() {
  for (Degree d = 1; d <= 20; ++d) {
    const std::vector<Degree> raw{d};
    const BigInt got = euler_characteristic(2, canonicalize(raw));
    const BigInt want = surface_hypersurface_euler(d);
    if (got != want) return "e(X_2(" + std::to_string(d) + ")) = " + got.str() + ", expected " + want.str();
  }
  return std::nullopt;
}

std::optional<std::string> check_printed_formulas(unsigned per_dimension, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(2, 60);
  std::uniform_int_distribution<int> length(1, 8);
  for (unsigned n = 2; n <= 7; ++n) {
    for (unsigned t = 0; t < per_dimension; ++t) {
      std::vector<Degree> raw;
      const int len = length(rng);
      for (int i = 0; i < len; ++i) raw.push_back(degree(rng));
      const Multidegree md = canonicalize(raw);
      const InvariantProfile prof = profile(n, md);
      const PrintedInvariants want = printed_formulas(n, md.degrees());
      const std::vector<BigInt> first_p(prof.p.begin(), prof.p.begin() + static_cast<long>(want.p.size()));
      if (prof.d != want.d || prof.c1() != want.c1 || first_p != want.p || prof.e != want.e) {
        return "n=" + std::to_string(n) + " " + md.to_string() + ": generic and printed formulas disagree";
      }
    }
  }
  return std::nullopt;
}

}  // namespace cinv::oracle
