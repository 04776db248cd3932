#include "cinv/invariants.hpp"

#include <sstream>

#include "json.hpp"

#include "cinv/newton.hpp"

namespace cinv {

namespace {

// a_i = n + r + 1 - s_i, 0-based.
std::vector<BigInt> shifted_sums(unsigned n, std::size_t r, std::span<const BigInt> sums,
                                 unsigned count) {
  std::vector<BigInt> a;
  a.reserve(count);
  const BigInt base = BigInt(n) + BigInt(r) + 1;
  for (unsigned i = 0; i < count; ++i) a.push_back(base - sums[i]);
  return a;
}

BigInt chern_from_shifted(std::span<const BigInt> a, unsigned k) {
  return exact_div(newton_g(k, a.first(k)), factorial(k), "c_" + std::to_string(k));
}

BigInt pontrjagin_from_shifted(std::span<const BigInt> a, unsigned k) {
  std::vector<BigInt> even;
  even.reserve(k);
  for (unsigned j = 1; j <= k; ++j) even.push_back(a[2 * j - 1]);
  return exact_div(newton_g(k, even), factorial(k), "p_" + std::to_string(k));
}

void require_dimension(unsigned n, unsigned lowest) {
  if (n < lowest) {
    throw InvalidInput("complex dimension must be at least " + std::to_string(lowest) + ", got " +
                       std::to_string(n));
  }
}

}  // namespace

BigInt chern_coefficient(unsigned n, const Multidegree& md, unsigned k) {
  if (k < 1 || k > n) {
    throw InvalidInput("chern_coefficient: k=" + std::to_string(k) + " outside 1.." +
                       std::to_string(n));
  }
  const auto s = power_sums(md, k);
  return chern_from_shifted(shifted_sums(n, md.codim(), s, k), k);
}

BigInt pontrjagin_coefficient(unsigned n, const Multidegree& md, unsigned k) {
  if (k < 1 || k > n / 2) {
    throw InvalidInput("pontrjagin_coefficient: k=" + std::to_string(k) + " outside 1.." +
                       std::to_string(n / 2));
  }
  const auto s = power_sums(md, 2 * k);
  return pontrjagin_from_shifted(shifted_sums(n, md.codim(), s, 2 * k), k);
}

BigInt euler_characteristic(unsigned n, const Multidegree& md) {
  require_dimension(n, 1);
  const auto s = power_sums(md, n);
  const auto a = shifted_sums(n, md.codim(), s, n);
  return exact_div(total_degree(md) * newton_g(n, a), factorial(n), "e");
}

InvariantProfile profile_from_power_sums(unsigned n, std::size_t r, const BigInt& d,
                                         std::span<const BigInt> sums) {
  require_dimension(n, 1);
  if (sums.size() < n) throw InvalidInput("profile: need power sums s_1..s_n");
  const auto a = shifted_sums(n, r, sums, n);

  InvariantProfile prof;
  prof.n = n;
  prof.r = r;
  prof.d = d;
  const auto g = newton_g_sequence(n, a);
  prof.c.reserve(n);
  for (unsigned k = 1; k <= n; ++k) {
    prof.c.push_back(exact_div(g[k - 1], factorial(k), "c_" + std::to_string(k)));
  }
  if (n >= 2) {
    std::vector<BigInt> even;
    for (unsigned j = 1; j <= n / 2; ++j) even.push_back(a[2 * j - 1]);
    const auto gp = newton_g_sequence(n / 2, even);
    for (unsigned k = 1; k <= n / 2; ++k) {
      prof.p.push_back(exact_div(gp[k - 1], factorial(k), "p_" + std::to_string(k)));
    }
  }
  // c_n is already integral, so d * c_n is the Euler number; the division
  // check below is the n! | d * g_n assertion in its strongest form.
  prof.e = exact_div(d * g[n - 1], factorial(n), "e");
  return prof;
}

InvariantProfile profile(unsigned n, const Multidegree& md) {
  require_dimension(n, 2);
  return profile_from_power_sums(n, md.codim(), total_degree(md), power_sums(md, n));
}

std::string profile_to_machine(const InvariantProfile& prof) {
  nlohmann::ordered_json j;
  j["n"] = std::to_string(prof.n);
  j["r"] = std::to_string(prof.r);
  j["d"] = to_decimal(prof.d);
  for (std::size_t k = 0; k < prof.c.size(); ++k) j["c" + std::to_string(k + 1)] = to_decimal(prof.c[k]);
  for (std::size_t k = 0; k < prof.p.size(); ++k) j["p" + std::to_string(k + 1)] = to_decimal(prof.p[k]);
  j["e"] = to_decimal(prof.e);
  if (!prof.p.empty()) j["d_p1"] = to_decimal(prof.d_times_p1());
  return j.dump();
}

InvariantProfile profile_from_machine(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("profile record: ") + ex.what());
  }
  auto field = [&](const std::string& key) -> BigInt {
    if (!j.contains(key) || !j[key].is_string()) {
      throw InvalidInput("profile record: missing string field '" + key + "'");
    }
    return parse_decimal(j[key].get<std::string>());
  };
  InvariantProfile prof;
  prof.n = field("n").convert_to<unsigned>();
  prof.r = field("r").convert_to<std::size_t>();
  prof.d = field("d");
  for (unsigned k = 1; k <= prof.n; ++k) prof.c.push_back(field("c" + std::to_string(k)));
  for (unsigned k = 1; k <= prof.n / 2; ++k) prof.p.push_back(field("p" + std::to_string(k)));
  prof.e = field("e");
  if (!prof.p.empty() && field("d_p1") != prof.d_times_p1()) {
    throw InvalidInput("profile record: d_p1 inconsistent with d and p1");
  }
  return prof;
}

std::string profile_to_text(const InvariantProfile& prof, const Multidegree& md) {
  std::ostringstream out;
  out << "X_" << prof.n << md.to_string() << '\n';
  out << "  r     = " << prof.r << '\n';
  out << "  d     = " << prof.d << '\n';
  for (std::size_t k = 0; k < prof.c.size(); ++k) out << "  c_" << k + 1 << "   = " << prof.c[k] << '\n';
  for (std::size_t k = 0; k < prof.p.size(); ++k) out << "  p_" << k + 1 << "   = " << prof.p[k] << '\n';
  if (!prof.p.empty()) out << "  d*p_1 = " << prof.d_times_p1() << '\n';
  out << "  e     = " << prof.e << '\n';
  return out.str();
}

}  // namespace cinv
