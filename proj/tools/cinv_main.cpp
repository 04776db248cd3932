// cinv: invariants, classification and pair search for smooth complete intersections.
//
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input or flags,
// 3 search resource limit exceeded.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cinv/classify.hpp"
#include "cinv/corpus.hpp"
#include "cinv/invariants.hpp"
#include "cinv/search.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitLimit = 3;

enum class Format { kText, kMachine };

Format parse_format(const std::string& s) {
  if (s == "text") return Format::kText;
  if (s == "machine") return Format::kMachine;
  throw cinv::InvalidInput("unknown format '" + s + "' (expected text|machine)");
}

int run_compute(unsigned dim, const std::string& degrees, Format fmt) {
  const cinv::Multidegree md = cinv::parse_multidegree(degrees);
  const cinv::InvariantProfile prof = cinv::profile(dim, md);
  if (fmt == Format::kMachine) {
    std::cout << cinv::profile_to_machine(prof) << '\n';
  } else {
    std::cout << cinv::profile_to_text(prof, md);
  }
  return 0;
}

int run_classify(unsigned dim, const std::string& a_text, const std::string& b_text, Format fmt) {
  const cinv::Multidegree a = cinv::parse_multidegree(a_text);
  const cinv::Multidegree b = cinv::parse_multidegree(b_text);
  const cinv::ClassificationVerdict v = cinv::classify_pair(dim, a, b);
  if (fmt == Format::kMachine) {
    nlohmann::ordered_json j;
    j["n"] = std::to_string(dim);
    j["a"] = a.to_string();
    j["b"] = b.to_string();
    j["codim_a"] = std::to_string(a.codim());
    j["codim_b"] = std::to_string(b.codim());
    j["relation"] = std::string(cinv::to_string(v.relation));
    j["criterion"] = std::string(cinv::to_string(v.criterion));
    j["distinct_c1"] = v.distinct_c1;
    j["notes"] = v.notes;
    auto compared = nlohmann::ordered_json::array();
    for (const auto& c : v.compared) {
      compared.push_back({{"name", c.name}, {"a", c.a.str()}, {"b", c.b.str()}});
    }
    j["compared"] = compared;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "X_" << dim << a.to_string() << " vs X_" << dim << b.to_string() << "  (codimensions "
              << a.codim() << " and " << b.codim() << ")\n";
    std::cout << cinv::verdict_to_text(v);
  }
  return 0;
}

int run_factor(const std::string& degrees, Format fmt) {
  const cinv::Multidegree md = cinv::parse_multidegree(degrees);
  const cinv::Factorization f = cinv::factorize_multidegree(md);
  const auto nu2 = cinv::padic_valuation(f, 2);
  const auto nu3 = cinv::padic_valuation(f, 3);
  if (fmt == Format::kMachine) {
    nlohmann::ordered_json j;
    j["d"] = f.value().str();
    j["factorization"] = f.to_string();
    j["nu2"] = std::to_string(nu2);
    j["nu3"] = std::to_string(nu3);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "d = " << f.value() << '\n'
              << "factorization = " << f.to_string() << '\n'
              << "nu_2 = " << nu2 << '\n'
              << "nu_3 = " << nu3 << '\n';
  }
  return 0;
}

int run_verify(const std::optional<std::string>& path, Format fmt) {
  const auto records = path ? cinv::load_corpus(*path) : cinv::embedded_corpus();
  const auto report = cinv::verify_corpus(records);
  std::cout << (fmt == Format::kMachine ? cinv::verification_to_machine(report)
                                        : cinv::verification_to_text(report));
  return report.all_passed() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological invariants and classification of smooth complete intersections"};
  app.require_subcommand(1);
  std::string format = "text";

  unsigned dim = 0;
  std::string degrees;
  auto* compute = app.add_subcommand("compute", "Invariant profile of X_n(d_1,...,d_r)");
  compute->add_option("--dim", dim, "Complex dimension n (>= 2)")->required();
  compute->add_option("--degrees", degrees, "Comma-separated degrees, e.g. 6,5,3")->required();

  std::string deg_a;
  std::string deg_b;
  auto* classify = app.add_subcommand("classify-pair", "Classify two complete intersections");
  classify->add_option("--dim", dim, "Complex dimension n (2..7)")->required();
  classify->add_option("--a", deg_a, "First multidegree")->required();
  classify->add_option("--b", deg_b, "Second multidegree")->required();

  cinv::SearchConfig config;
  std::string mode = "invariant";
  std::optional<std::string> max_total;
  auto* search = app.add_subcommand("search", "Search for distinct multidegrees with matching keys");
  search->add_option("--dim", config.n, "Complex dimension n (2..7)")->required();
  search->add_option("--max-degree", config.max_degree, "Largest degree considered")->required();
  search->add_option("--max-codim", config.max_codim, "Largest codimension considered")->required();
  search->add_option("--min-codim", config.min_codim, "Smallest codimension considered");
  search->add_option("--mode", mode, "Match key: invariant or powersum")
      ->check(CLI::IsMember({"invariant", "powersum"}));
  auto* distinct = search->add_flag("--distinct-c1", config.require_distinct_c1, "Keep pairs with different c_1");
  auto* equal = search->add_flag("--equal-c1", config.require_equal_c1, "Keep pairs with equal c_1");
  distinct->excludes(equal);
  search->add_flag("--rigidity-pruning", config.apply_rigidity_pruning,
                   "Drop pairs whose members both have r <= (n+2)/2");
  search->add_option("--max-total-degree", max_total, "Cap on the total degree");
  search->add_option("--workers", config.worker_count, "Worker threads");
  search->add_option("--max-candidates", config.max_candidates, "Cap on enumerated candidates");

  std::optional<std::string> corpus_path;
  auto* verify = app.add_subcommand("verify-tables", "Recompute the regression corpus");
  verify->add_option("--corpus", corpus_path, "Corpus file or directory (default: embedded corpus)");

  auto* factor = app.add_subcommand("factor", "Factor the total degree from its parts");
  factor->add_option("--degrees", degrees, "Comma-separated degrees")->required();

  for (auto* sub : {compute, classify, search, verify, factor}) {
    sub->add_option("--format", format, "Output format: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    const Format fmt = parse_format(format);
    if (*compute) return run_compute(dim, degrees, fmt);
    if (*classify) return run_classify(dim, deg_a, deg_b, fmt);
    if (*factor) return run_factor(degrees, fmt);
    if (*verify) return run_verify(corpus_path, fmt);
    if (*search) {
      config.mode = cinv::parse_key_mode(mode);
      if (max_total) config.max_total_degree = cinv::parse_decimal(*max_total);
      const auto reports = cinv::search_pairs(config);
      std::cout << (fmt == Format::kMachine ? cinv::reports_to_machine(reports)
                                            : cinv::reports_to_text(reports));
      return 0;
    }
  } catch (const cinv::SearchLimitExceeded& e) {
    std::cerr << "error: resource limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const cinv::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const cinv::CorpusError& e) {
    std::cerr << "error: malformed corpus: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
