#include "cinv/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cinv/invariants.hpp"

namespace cinv {

namespace detail {
struct EmbeddedFile {
  std::string_view name;
  std::string_view text;
};
extern const EmbeddedFile kEmbeddedCorpus[];
extern const std::size_t kEmbeddedCorpusCount;
}  // namespace detail

std::string_view to_string(Claim c) noexcept {
  switch (c) {
    case Claim::kHomeomorphic: return "homeomorphic";
    case Claim::kDiffeomorphic: return "diffeomorphic";
    case Claim::kHomeoNotDiffeo: return "homeo-not-diffeo";
  }
  return "?";
}

bool claim_satisfied(Claim claim, Relation relation) noexcept {
  switch (claim) {
    case Claim::kHomeomorphic:
      return relation == Relation::kHomeomorphic || relation == Relation::kDiffeomorphic;
    case Claim::kDiffeomorphic: return relation == Relation::kDiffeomorphic;
    case Claim::kHomeoNotDiffeo: return relation == Relation::kHomeomorphicNotDiffeomorphic;
  }
  return false;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool has_index_suffix(std::string_view name, std::string_view prefix, unsigned& index) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return false;
  index = 0;
  for (const char ch : name.substr(prefix.size())) {
    if (ch < '0' || ch > '9') return false;
    index = index * 10 + static_cast<unsigned>(ch - '0');
  }
  return index > 0;
}

bool known_field(std::string_view name) {
  static const std::set<std::string_view> plain = {"d", "d_p1", "e", "e_over_d", "factorization"};
  if (plain.contains(name)) return true;
  unsigned k = 0;
  if (has_index_suffix(name, "nu", k)) return is_prime(k);
  return has_index_suffix(name, "c", k) || has_index_suffix(name, "p", k) ||
         has_index_suffix(name, "s", k);
}

Claim parse_claim(std::string_view v, const std::string& where) {
  if (v == "homeomorphic") return Claim::kHomeomorphic;
  if (v == "diffeomorphic") return Claim::kDiffeomorphic;
  if (v == "homeo-not-diffeo") return Claim::kHomeoNotDiffeo;
  throw CorpusError(where + ": unknown claim '" + std::string(v) + "'");
}

}  // namespace

std::vector<CorpusRecord> parse_corpus(std::string_view text, std::string_view source) {
  std::vector<CorpusRecord> records;
  std::set<std::string> seen_keys;
  bool have_n = false;
  bool have_degrees = false;

  auto finish = [&](const std::string& where) {
    if (records.empty()) return;
    if (!have_n || !have_degrees) {
      throw CorpusError(where + ": record '" + records.back().id + "' needs both n and degrees");
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string where = std::string(source) + ":" + std::to_string(line_no);

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw CorpusError(where + ": malformed record header");
      finish(where);
      CorpusRecord rec;
      rec.id = std::string(trim(line.substr(1, line.size() - 2)));
      rec.origin = where;
      records.push_back(std::move(rec));
      seen_keys.clear();
      have_n = have_degrees = false;
      continue;
    }

    if (records.empty()) throw CorpusError(where + ": field outside of a record");
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw CorpusError(where + ": expected 'name = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen_keys.insert(key).second) throw CorpusError(where + ": duplicate field '" + key + "'");
    CorpusRecord& rec = records.back();

    try {
      if (key == "n") {
        const BigInt n = parse_decimal(value);
        if (n < 1 || n > 64) throw CorpusError(where + ": dimension out of range");
        rec.n = n.convert_to<unsigned>();
        have_n = true;
      } else if (key == "degrees") {
        rec.degrees = parse_multidegree(value);
        if (value.empty()) throw CorpusError(where + ": degrees must be nonempty");
        have_degrees = true;
      } else if (key == "claim") {
        rec.claim = parse_claim(value, where);
      } else if (key == "partner") {
        rec.partner = std::string(value);
      } else {
        const bool info = key.starts_with("info.");
        const std::string name = info ? key.substr(5) : key;
        if (!known_field(name)) throw CorpusError(where + ": unknown field '" + key + "'");
        if (name == "factorization") {
          parse_factorization(value);
        } else {
          parse_decimal(value);
        }
        rec.expected.push_back({name, std::string(value), info});
      }
    } catch (const InvalidInput& ex) {
      throw CorpusError(where + ": " + ex.what());
    }
  }
  finish(std::string(source) + ":eof");
  return records;
}

std::vector<CorpusRecord> load_corpus(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::is_regular_file(path)) {
    files.emplace_back(path);
  } else {
    throw CorpusError("corpus path not found: " + path);
  }
  std::vector<CorpusRecord> all;
  for (const auto& file : files) {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    auto recs = parse_corpus(buf.str(), file.filename().string());
    all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  check_cross_references(all);
  return all;
}

std::vector<CorpusRecord> embedded_corpus() {
  std::vector<CorpusRecord> all;
  for (std::size_t i = 0; i < detail::kEmbeddedCorpusCount; ++i) {
    const auto& file = detail::kEmbeddedCorpus[i];
    auto recs = parse_corpus(file.text, file.name);
    all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  check_cross_references(all);
  return all;
}

void check_cross_references(const std::vector<CorpusRecord>& records) {
  std::map<std::string_view, const CorpusRecord*> by_id;
  for (const auto& r : records) {
    if (!by_id.emplace(r.id, &r).second) throw CorpusError(r.origin + ": duplicate record id '" + r.id + "'");
  }
  for (const auto& r : records) {
    if (r.claim.has_value() != r.partner.has_value()) {
      throw CorpusError(r.origin + ": '" + r.id + "' must carry both claim and partner, or neither");
    }
    if (!r.partner) continue;
    const auto it = by_id.find(*r.partner);
    if (it == by_id.end()) throw CorpusError(r.origin + ": partner '" + *r.partner + "' not found");
    const CorpusRecord& other = *it->second;
    if (other.partner != r.id) {
      throw CorpusError(r.origin + ": partner '" + other.id + "' does not point back to '" + r.id + "'");
    }
    if (other.n != r.n || other.claim != r.claim) {
      throw CorpusError(r.origin + ": '" + r.id + "' and '" + other.id + "' disagree on n or claim");
    }
  }
}

namespace {

std::string compute_field(const CorpusRecord& rec, const InvariantProfile* prof, std::string_view name) {
  unsigned k = 0;
  auto need_profile = [&]() -> const InvariantProfile& {
    if (!prof) throw CorpusError(rec.origin + ": field '" + std::string(name) + "' needs n >= 2");
    return *prof;
  };
  if (name == "d") return to_decimal(total_degree(rec.degrees));
  if (name == "d_p1") return to_decimal(need_profile().d_times_p1());
  if (name == "e") return to_decimal(euler_characteristic(rec.n, rec.degrees));
  if (name == "e_over_d") return to_decimal(chern_coefficient(rec.n, rec.degrees, rec.n));
  if (name == "factorization") return factorize_multidegree(rec.degrees).to_string();
  if (has_index_suffix(name, "nu", k)) {
    return std::to_string(padic_valuation(factorize_multidegree(rec.degrees), k));
  }
  if (has_index_suffix(name, "c", k)) return to_decimal(chern_coefficient(rec.n, rec.degrees, k));
  if (has_index_suffix(name, "p", k)) return to_decimal(pontrjagin_coefficient(rec.n, rec.degrees, k));
  if (has_index_suffix(name, "s", k)) return to_decimal(power_sums(rec.degrees, k).back());
  throw CorpusError(rec.origin + ": unknown field '" + std::string(name) + "'");
}

bool values_match(std::string_view name, const std::string& expected, const std::string& actual) {
  if (name == "factorization") return parse_factorization(expected) == parse_factorization(actual);
  return parse_decimal(expected) == parse_decimal(actual);
}

}  // namespace

VerificationReport verify_corpus(const std::vector<CorpusRecord>& records) {
  check_cross_references(records);
  std::map<std::string_view, const CorpusRecord*> by_id;
  for (const auto& r : records) by_id.emplace(r.id, &r);

  VerificationReport report;
  for (const auto& rec : records) {
    RecordResult result;
    result.id = rec.id;
    std::optional<InvariantProfile> prof;
    if (rec.n >= 2) prof = profile(rec.n, rec.degrees);

    for (const auto& field : rec.expected) {
      FieldCheck check;
      check.name = field.name;
      check.expected = field.value;
      check.informational = field.informational;
      try {
        check.actual = compute_field(rec, prof ? &*prof : nullptr, field.name);
        check.ok = values_match(field.name, field.value, check.actual);
      } catch (const InvalidInput& ex) {
        check.actual = std::string("error: ") + ex.what();
        check.ok = false;
      }
      if (!check.ok) {
        if (check.informational) {
          ++report.informational_mismatches;
        } else if (result.first_failure.empty()) {
          result.first_failure = "field " + check.name + ": expected " + check.expected + ", got " + check.actual;
        }
      }
      result.fields.push_back(std::move(check));
    }

    if (rec.claim) {
      const CorpusRecord& partner = *by_id.at(*rec.partner);
      result.verdict = classify_pair(rec.n, rec.degrees, partner.degrees);
      result.claim_ok = claim_satisfied(*rec.claim, result.verdict->relation);
      if (!result.claim_ok && result.first_failure.empty()) {
        result.first_failure = "claim " + std::string(to_string(*rec.claim)) + " with " + partner.id +
                               " not reproduced: got " + std::string(to_string(result.verdict->relation));
      }
    }
    result.passed = result.first_failure.empty();
    ++(result.passed ? report.passed : report.failed);
    report.records.push_back(std::move(result));
  }
  return report;
}

std::string verification_to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.records) {
    std::size_t checked = 0;
    for (const auto& f : r.fields) checked += f.informational ? 0 : 1;
    out << (r.passed ? "PASS " : "FAIL ") << r.id << "  (" << checked << " fields";
    if (r.verdict) out << ", " << to_string(r.verdict->relation);
    out << ")";
    if (!r.passed) out << "  " << r.first_failure;
    out << '\n';
    for (const auto& f : r.fields) {
      if (!f.informational) continue;
      out << "     info " << f.name << ": recorded " << f.expected << ", computed " << f.actual
          << (f.ok ? "" : "  (differs, not an error)") << '\n';
    }
  }
  out << "summary: " << report.passed << " passed, " << report.failed << " failed, "
      << report.informational_mismatches << " informational mismatches\n";
  return out.str();
}

std::string verification_to_machine(const VerificationReport& report) {
  nlohmann::ordered_json root;
  auto recs = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["passed"] = r.passed;
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    auto fields = nlohmann::ordered_json::array();
    for (const auto& f : r.fields) {
      fields.push_back({{"name", f.name}, {"expected", f.expected}, {"actual", f.actual},
                        {"informational", f.informational}, {"ok", f.ok}});
    }
    j["fields"] = fields;
    if (r.verdict) {
      j["relation"] = std::string(to_string(r.verdict->relation));
      j["criterion"] = std::string(to_string(r.verdict->criterion));
      j["claim_ok"] = r.claim_ok;
    }
    recs.push_back(j);
  }
  root["records"] = recs;
  root["passed"] = report.passed;
  root["failed"] = report.failed;
  root["informational_mismatches"] = report.informational_mismatches;
  return root.dump(2) + "\n";
}

}  // namespace cinv
