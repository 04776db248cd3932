#include "cinv/multidegree.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <functional>
#include <sstream>

namespace cinv {

Multidegree Multidegree::from_canonical(std::vector<Degree> degrees) {
  assert(std::is_sorted(degrees.begin(), degrees.end(), std::greater<>{}));
  assert(degrees.empty() || degrees.back() >= 2);
  return Multidegree(std::move(degrees));
}

std::string Multidegree::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out << ',';
    out << degrees_[i];
  }
  out << ')';
  return out.str();
}

Multidegree canonicalize(std::span<const Degree> raw) {
  std::vector<Degree> kept;
  kept.reserve(raw.size());
  for (const Degree d : raw) {
    if (d <= 0) throw InvalidInput("degrees must be positive, got " + std::to_string(d));
    if (d != 1) kept.push_back(d);
  }
  std::sort(kept.begin(), kept.end(), std::greater<>{});
  return Multidegree::from_canonical(std::move(kept));
}

Multidegree parse_multidegree(std::string_view text) {
  std::vector<Degree> raw;
  std::size_t start = 0;
  auto trimmed = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  // Tolerate the "(6,5,3)" rendering as well as "6,5,3".
  text = trimmed(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = text.substr(1, text.size() - 2);
  }
  if (trimmed(text).empty()) return Multidegree{};
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        trimmed(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                   : comma - start));
    Degree v{};
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw InvalidInput("not a degree list: '" + std::string(text) + "'");
    }
    raw.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return canonicalize(raw);
}

BigInt total_degree(const Multidegree& md) {
  BigInt d = 1;
  for (const Degree v : md.degrees()) d *= v;
  return d;
}

std::vector<BigInt> power_sums(std::span<const Degree> degrees, unsigned m) {
  if (m == 0) throw InvalidInput("power_sums: m must be at least 1");
  std::vector<BigInt> s(m, BigInt(0));
  for (const Degree v : degrees) {
    BigInt power = 1;
    for (unsigned i = 0; i < m; ++i) {
      power *= v;
      s[i] += power;
    }
  }
  return s;
}

Factorization factorize_multidegree(const Multidegree& md) {
  std::vector<Factorization> parts;
  parts.reserve(md.codim());
  for (const Degree v : md.degrees()) parts.push_back(factorize(v));
  return merge_factorizations(parts);
}

}  // namespace cinv
