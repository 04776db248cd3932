#include "cinv/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"

#include "cinv/invariants.hpp"

namespace cinv {

std::string_view to_string(KeyMode m) noexcept {
  return m == KeyMode::kInvariant ? "invariant" : "powersum";
}

KeyMode parse_key_mode(std::string_view text) {
  if (text == "invariant") return KeyMode::kInvariant;
  if (text == "powersum") return KeyMode::kPowerSum;
  throw InvalidInput("unknown key mode '" + std::string(text) + "' (expected invariant|powersum)");
}

void SearchConfig::validate() const {
  if (n < 2 || n > 7) throw InvalidInput("search: dimension must be in 2..7");
  if (max_degree < 2) throw InvalidInput("search: max degree must be at least 2");
  if (min_codim < 1) throw InvalidInput("search: min codimension must be at least 1");
  if (max_codim < min_codim) throw InvalidInput("search: max codimension below min codimension");
  if (require_distinct_c1 && require_equal_c1) {
    throw InvalidInput("search: distinct-c1 and equal-c1 filters are mutually exclusive");
  }
  if (max_total_degree && *max_total_degree < 2) {
    throw InvalidInput("search: max total degree must be at least 2");
  }
  if (worker_count == 0) throw InvalidInput("search: worker count must be at least 1");
}

std::string MatchKey::encode() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += values[i].str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Enumerator {
  const SearchConfig& config;
  const std::function<void(const Multidegree&)>& sink;
  std::vector<Degree> buf;

  // Fills buf[pos..r) non-increasingly, values ascending so the output is lexicographic.
  void fill(std::size_t pos, std::size_t r, const BigInt& product) {
    if (pos == r) {
      sink(Multidegree::from_canonical(buf));
      return;
    }
    const Degree top = pos == 0 ? config.max_degree : buf[pos - 1];
    const std::size_t remaining_after = r - pos - 1;
    for (Degree v = 2; v <= top; ++v) {
      BigInt next = product * v;
      if (config.max_total_degree) {
        // Every later entry is at least 2.
        if (next * (BigInt(1) << remaining_after) > *config.max_total_degree) break;
      }
      buf[pos] = v;
      fill(pos + 1, r, next);
    }
  }

  void run_leading(Degree leading, std::size_t r) {
    buf.assign(r, 0);
    buf[0] = leading;
    const BigInt product = leading;
    if (config.max_total_degree &&
        product * (BigInt(1) << (r - 1)) > *config.max_total_degree) {
      return;
    }
    fill(1, r, product);
  }
};

}  // namespace

void enumerate_multidegrees(const SearchConfig& config,
                            const std::function<void(const Multidegree&)>& sink) {
  config.validate();
  Enumerator e{config, sink, {}};
  for (std::size_t r = config.min_codim; r <= config.max_codim; ++r) {
    e.buf.assign(r, 0);
    e.fill(0, r, BigInt(1));
  }
}

std::vector<Multidegree> enumerate_multidegrees(const SearchConfig& config) {
  std::vector<Multidegree> out;
  enumerate_multidegrees(config, [&](const Multidegree& md) { out.push_back(md); });
  return out;
}

void enumerate_with_leading(const SearchConfig& config, Degree leading,
                            const std::function<void(const Multidegree&)>& sink) {
  config.validate();
  if (leading < 2 || leading > config.max_degree) return;
  Enumerator e{config, sink, {}};
  for (std::size_t r = config.min_codim; r <= config.max_codim; ++r) e.run_leading(leading, r);
}

// ---------------------------------------------------------------------------
// Keys

namespace {

MatchKey key_from_profile(const InvariantProfile& prof, std::span<const BigInt> sums, KeyMode mode) {
  MatchKey key;
  key.mode = mode;
  auto push = [&](std::string name, BigInt value) {
    key.names.push_back(std::move(name));
    key.values.push_back(std::move(value));
  };
  if (mode == KeyMode::kPowerSum) {
    push("d", prof.d);
    for (unsigned i = 0; i < prof.n; ++i) push("s" + std::to_string(i + 1), sums[i]);
    return key;
  }
  if (prof.n == 2) {
    push("d_p1", prof.d_times_p1());
    push("e", prof.e);
    BigInt parity = prof.c1() % 2;
    if (parity < 0) parity = -parity;
    push("c1_mod_2", std::move(parity));
    return key;
  }
  push("d", prof.d);
  const std::size_t pk = prof.n == 3 ? 1 : prof.p.size();
  for (std::size_t k = 0; k < pk; ++k) push("p" + std::to_string(k + 1), prof.p[k]);
  push("e", prof.e);
  return key;
}

struct Candidate {
  Multidegree md;
  BigInt c1;
  BigInt d;
};

struct Group {
  MatchKey key;
  std::vector<Candidate> members;
};

using KeyTable = std::unordered_map<std::string, Group>;

Candidate make_candidate(unsigned n, const Multidegree& md, KeyMode mode, MatchKey& key_out) {
  const auto sums = power_sums(md, n);
  const BigInt d = total_degree(md);
  const InvariantProfile prof = profile_from_power_sums(n, md.codim(), d, sums);
  key_out = key_from_profile(prof, sums, mode);
  return {md, prof.c1(), d};
}

}  // namespace

MatchKey match_key(unsigned n, const Multidegree& md, KeyMode mode) {
  if (n < 2 || n > 7) throw InvalidInput("match_key: dimension must be in 2..7");
  MatchKey key;
  make_candidate(n, md, mode, key);
  return key;
}

// ---------------------------------------------------------------------------
// Search

namespace {

bool pair_passes(const SearchConfig& config, const Candidate& a, const Candidate& b) {
  if (config.require_distinct_c1 && a.c1 == b.c1) return false;
  if (config.require_equal_c1 && a.c1 != b.c1) return false;
  if (config.apply_rigidity_pruning && rigidity_excludes_pair(config.n, a.md) &&
      rigidity_excludes_pair(config.n, b.md)) {
    return false;
  }
  return true;
}

std::optional<PairReport> build_report(const SearchConfig& config, Group& group) {
  auto& m = group.members;
  std::sort(m.begin(), m.end(), [](const Candidate& x, const Candidate& y) { return x.md < y.md; });
  m.erase(std::unique(m.begin(), m.end(), [](const Candidate& x, const Candidate& y) { return x.md == y.md; }),
          m.end());
  if (m.size() < 2) return std::nullopt;

  std::vector<std::pair<std::size_t, std::size_t>> passing;
  std::vector<bool> used(m.size(), false);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (pair_passes(config, m[i], m[j])) {
        passing.emplace_back(i, j);
        used[i] = used[j] = true;
      }
    }
  }
  if (passing.empty()) return std::nullopt;

  PairReport report;
  report.n = config.n;
  report.key = group.key;
  std::vector<std::size_t> remap(m.size());
  std::vector<InvariantProfile> profiles;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!used[i]) continue;
    // Soundness: recompute the key from scratch.
    if (!(match_key(config.n, m[i].md, config.mode) == group.key)) {
      throw InternalError("search: member " + m[i].md.to_string() + " does not reproduce its key");
    }
    remap[i] = report.members.size();
    report.members.push_back(m[i].md);
    report.c1.push_back(m[i].c1);
    report.total_degrees.push_back(m[i].d);
    profiles.push_back(profile(config.n, m[i].md));
  }
  for (const auto& [i, j] : passing) {
    const std::size_t a = remap[i];
    const std::size_t b = remap[j];
    report.pairs.push_back({a, b, classify_profiles(report.members[a], profiles[a], report.members[b], profiles[b])});
  }
  return report;
}

}  // namespace

std::vector<PairReport> search_pairs(const SearchConfig& config) {
  config.validate();

  const unsigned workers = config.worker_count;
  std::vector<KeyTable> tables(workers);
  std::atomic<Degree> next_leading{config.max_degree};
  std::atomic<std::size_t> candidates{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  // Work is partitioned by the leading (largest) degree; larger leading
  // degrees carry more tuples, so they are handed out first.
  auto scan = [&](unsigned worker) {
    KeyTable& table = tables[worker];
    try {
      for (Degree leading = next_leading--; leading >= 2 && !abort; leading = next_leading--) {
        enumerate_with_leading(config, leading, [&](const Multidegree& md) {
          if (abort) return;
          if (candidates.fetch_add(1) + 1 > config.max_candidates) {
            throw SearchLimitExceeded("search: more than " + std::to_string(config.max_candidates) +
                                      " candidates; tighten the bounds or raise the cap");
          }
          MatchKey key;
          Candidate cand = make_candidate(config.n, md, config.mode, key);
          std::string encoded = key.encode();
          auto [it, inserted] = table.try_emplace(std::move(encoded));
          if (inserted) it->second.key = std::move(key);
          it->second.members.push_back(std::move(cand));
        });
      }
    } catch (...) {
      abort = true;
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  if (failure) std::rethrow_exception(failure);

  // Deterministic merge: ordered by encoded key, members sorted in build_report.
  std::map<std::string, Group> merged;
  for (auto& table : tables) {
    for (auto& [encoded, group] : table) {
      auto [it, inserted] = merged.try_emplace(encoded);
      if (inserted) it->second.key = std::move(group.key);
      auto& dst = it->second.members;
      dst.insert(dst.end(), std::make_move_iterator(group.members.begin()),
                 std::make_move_iterator(group.members.end()));
    }
    table.clear();
  }

  std::vector<PairReport> reports;
  for (auto& [encoded, group] : merged) {
    if (group.members.size() < 2) continue;
    if (auto report = build_report(config, group)) reports.push_back(std::move(*report));
  }
  std::sort(reports.begin(), reports.end(), [](const PairReport& x, const PairReport& y) {
    const BigInt& dx = *std::min_element(x.total_degrees.begin(), x.total_degrees.end());
    const BigInt& dy = *std::min_element(y.total_degrees.begin(), y.total_degrees.end());
    if (dx != dy) return dx < dy;
    return x.members.front() < y.members.front();
  });
  return reports;
}

std::variant<PairReport, KeyMismatch> verify_known_pair(unsigned n, std::span<const Degree> a,
                                                        std::span<const Degree> b, KeyMode mode) {
  if (n < 2 || n > 7) throw InvalidInput("verify: dimension must be in 2..7");
  Multidegree ma = canonicalize(a);
  Multidegree mb = canonicalize(b);
  MatchKey ka;
  MatchKey kb;
  Candidate ca = make_candidate(n, ma, mode, ka);
  Candidate cb = make_candidate(n, mb, mode, kb);
  for (std::size_t i = 0; i < ka.values.size(); ++i) {
    if (ka.values[i] != kb.values[i]) return KeyMismatch{ka.names[i], ka.values[i], kb.values[i]};
  }
  if (mb < ma) std::swap(ca, cb);
  PairReport report;
  report.n = n;
  report.key = ka;
  report.members = {ca.md, cb.md};
  report.c1 = {ca.c1, cb.c1};
  report.total_degrees = {ca.d, cb.d};
  report.pairs.push_back({0, 1, classify_pair(n, ca.md, cb.md)});
  return report;
}

// ---------------------------------------------------------------------------
// Rendering

std::string reports_to_text(const std::vector<PairReport>& reports) {
  if (reports.empty()) return "no pairs found\n";
  std::ostringstream out;
  for (std::size_t g = 0; g < reports.size(); ++g) {
    const auto& r = reports[g];
    out << "group " << g + 1 << "  n=" << r.n << "  key[" << to_string(r.key.mode) << "]";
    for (std::size_t i = 0; i < r.key.values.size(); ++i) {
      out << ' ' << r.key.names[i] << '=' << r.key.values[i];
    }
    out << '\n';
    for (std::size_t i = 0; i < r.members.size(); ++i) {
      out << "  " << r.members[i].to_string() << "  r=" << r.members[i].codim()
          << "  d=" << r.total_degrees[i] << "  c_1=" << r.c1[i] << '\n';
    }
    for (const auto& pv : r.pairs) {
      out << "  " << r.members[pv.first].to_string() << " ~ " << r.members[pv.second].to_string()
          << ": " << to_string(pv.verdict.relation);
      if (pv.verdict.criterion != Criterion::kNone) out << " [" << to_string(pv.verdict.criterion) << "]";
      if (!pv.verdict.notes.empty()) out << "; " << pv.verdict.notes;
      out << '\n';
    }
  }
  out << reports.size() << " group(s)\n";
  return out.str();
}

namespace {

nlohmann::ordered_json degrees_json(const Multidegree& md) {
  auto arr = nlohmann::ordered_json::array();
  for (const Degree v : md.degrees()) arr.push_back(std::to_string(v));
  return arr;
}

}  // namespace

std::string reports_to_machine(const std::vector<PairReport>& reports) {
  auto root = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json g;
    g["n"] = std::to_string(r.n);
    g["mode"] = std::string(to_string(r.key.mode));
    nlohmann::ordered_json key;
    for (std::size_t i = 0; i < r.key.values.size(); ++i) key[r.key.names[i]] = r.key.values[i].str();
    g["key"] = key;
    auto members = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.members.size(); ++i) {
      nlohmann::ordered_json m;
      m["degrees"] = degrees_json(r.members[i]);
      m["d"] = r.total_degrees[i].str();
      m["c1"] = r.c1[i].str();
      members.push_back(m);
    }
    g["members"] = members;
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& pv : r.pairs) {
      nlohmann::ordered_json p;
      p["a"] = pv.first;
      p["b"] = pv.second;
      p["relation"] = std::string(to_string(pv.verdict.relation));
      p["criterion"] = std::string(to_string(pv.verdict.criterion));
      p["distinct_c1"] = pv.verdict.distinct_c1;
      p["notes"] = pv.verdict.notes;
      pairs.push_back(p);
    }
    g["pairs"] = pairs;
    root.push_back(g);
  }
  return root.dump(2) + "\n";
}

}  // namespace cinv
