#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cinv/classify.hpp"
#include "cinv/multidegree.hpp"

namespace cinv {

/// Relation a corpus pair is expected to reach (at least).
enum class Claim { kHomeomorphic, kDiffeomorphic, kHomeoNotDiffeo };

std::string_view to_string(Claim c) noexcept;

struct ExpectedField {
  std::string name;
  std::string value;  // decimal integer, or a factorization string for "factorization"
  bool informational = false;
};

struct CorpusRecord {
  std::string id;
  unsigned n = 0;
  Multidegree degrees;
  std::vector<ExpectedField> expected;
  std::optional<Claim> claim;
  std::optional<std::string> partner;
  std::string origin;  // "file:line"
};

/// Malformed corpus text or unresolved cross references.
class CorpusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Record format:
///
///   # comment
///   [record.id]
///   n = 3
///   degrees = 20,20,11,7,4
///   claim = diffeomorphic
///   partner = other.id
///   e = -6974721600
///   info.nu3 = 13
///
/// `info.` fields are reported but never fail verification.
std::vector<CorpusRecord> parse_corpus(std::string_view text, std::string_view source = "<corpus>");

/// Reads a single file, or every *.txt file (sorted by name) in a directory.
std::vector<CorpusRecord> load_corpus(const std::string& path);

/// Corpus compiled into the library.
std::vector<CorpusRecord> embedded_corpus();

/// Partners must exist, point back, and share n.
void check_cross_references(const std::vector<CorpusRecord>& records);

struct FieldCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool informational = false;
  bool ok = false;
};

struct RecordResult {
  std::string id;
  std::vector<FieldCheck> fields;
  std::optional<ClassificationVerdict> verdict;  // set when the record has a claim
  bool claim_ok = true;
  bool passed = false;
  std::string first_failure;  // empty when passed
};

struct VerificationReport {
  std::vector<RecordResult> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t informational_mismatches = 0;

  bool all_passed() const noexcept { return failed == 0; }
};

/// Recomputes every expected field. Names understood: d, d_p1, c1..c7, p1..p3,
/// e, e_over_d, s1..s<any>, nu<prime>, factorization.
VerificationReport verify_corpus(const std::vector<CorpusRecord>& records);

bool claim_satisfied(Claim claim, Relation relation) noexcept;

std::string verification_to_text(const VerificationReport& report);
std::string verification_to_machine(const VerificationReport& report);

}  // namespace cinv
