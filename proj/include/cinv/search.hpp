#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cinv/bigint.hpp"
#include "cinv/classify.hpp"
#include "cinv/multidegree.hpp"

namespace cinv {

enum class KeyMode { kInvariant, kPowerSum };

std::string_view to_string(KeyMode m) noexcept;
KeyMode parse_key_mode(std::string_view text);

struct SearchConfig {
  unsigned n = 2;
  Degree max_degree = 2;
  std::size_t max_codim = 1;
  std::size_t min_codim = 1;
  std::optional<BigInt> max_total_degree;
  KeyMode mode = KeyMode::kInvariant;
  bool require_distinct_c1 = false;
  bool require_equal_c1 = false;
  bool apply_rigidity_pruning = false;
  unsigned worker_count = 1;
  /// Upper bound on the number of enumerated candidates held in the key tables.
  std::size_t max_candidates = 50'000'000;

  /// Throws InvalidInput describing the first violated constraint.
  void validate() const;
};

/// Raised when the key tables would exceed SearchConfig::max_candidates.
class SearchLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct MatchKey {
  KeyMode mode = KeyMode::kInvariant;
  std::vector<std::string> names;
  std::vector<BigInt> values;

  /// Comma-joined decimal values; injective, used as the hash-table key.
  std::string encode() const;
  friend bool operator==(const MatchKey& a, const MatchKey& b) {
    return a.mode == b.mode && a.values == b.values;
  }
};

struct PairVerdict {
  std::size_t first = 0;   // indices into PairReport::members
  std::size_t second = 0;
  ClassificationVerdict verdict;
};

struct PairReport {
  unsigned n = 0;
  MatchKey key;
  std::vector<Multidegree> members;  // sorted ascending, mutually distinct
  std::vector<BigInt> c1;            // parallel to members
  std::vector<BigInt> total_degrees; // parallel to members
  std::vector<PairVerdict> pairs;
};

struct KeyMismatch {
  std::string field;
  BigInt a;
  BigInt b;
};

/// Calls `sink` for every canonical multidegree admitted by the config: by
/// codimension, then lexicographically ascending on the non-increasing tuple.
void enumerate_multidegrees(const SearchConfig& config,
                            const std::function<void(const Multidegree&)>& sink);
std::vector<Multidegree> enumerate_multidegrees(const SearchConfig& config);

/// Only tuples whose leading (largest) degree equals `leading`.
void enumerate_with_leading(const SearchConfig& config, Degree leading,
                            const std::function<void(const Multidegree&)>& sink);

MatchKey match_key(unsigned n, const Multidegree& md, KeyMode mode);

std::vector<PairReport> search_pairs(const SearchConfig& config);

std::variant<PairReport, KeyMismatch> verify_known_pair(unsigned n, std::span<const Degree> a,
                                                        std::span<const Degree> b, KeyMode mode);

std::string reports_to_text(const std::vector<PairReport>& reports);
std::string reports_to_machine(const std::vector<PairReport>& reports);

}  // namespace cinv
