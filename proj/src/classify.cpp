#include "cinv/classify.hpp"

#include <sstream>

namespace cinv {

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::kIdenticalMultidegree: return "identical-multidegree";
    case Relation::kDiffeomorphic: return "diffeomorphic";
    case Relation::kHomeomorphic: return "homeomorphic";
    case Relation::kHomeomorphicNotDiffeomorphic: return "homeomorphic-not-diffeomorphic";
    case Relation::kInvariantsDiffer: return "invariants-differ";
    case Relation::kUndecided: return "undecided";
  }
  return "?";
}

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::kNone: return "none";
    case Criterion::kExoticDim2: return "ebeling-libgober-wood";
    case Criterion::kJuppWall: return "jupp-wall";
    case Criterion::kFangKlausWang: return "fang-klaus-wang";
    case Criterion::kTraving: return "traving";
  }
  return "?";
}

std::vector<TravingThreshold> traving_thresholds(unsigned n) {
  std::vector<TravingThreshold> out;
  for (std::uint64_t p = 2; p * (p - 1) <= static_cast<std::uint64_t>(n) + 1; ++p) {
    if (!is_prime(p)) continue;
    out.push_back({p, BigRat(BigInt(2 * n + 1), BigInt(2 * (p - 1))) + 1});
  }
  return out;
}

bool traving_condition(unsigned n, const Factorization& f) {
  if (n <= 2) throw InvalidInput("traving_condition requires complex dimension > 2");
  for (const auto& t : traving_thresholds(n)) {
    if (BigRat(padic_valuation(f, t.p)) < t.threshold) return false;
  }
  return true;
}

namespace {

void require_same_n(const InvariantProfile& a, const InvariantProfile& b, unsigned lo, unsigned hi,
                    std::string_view what) {
  if (a.n != b.n) throw InvalidInput(std::string(what) + ": profiles computed for different dimensions");
  if (a.n < lo || a.n > hi) {
    throw InvalidInput(std::string(what) + ": dimension " + std::to_string(a.n) + " outside " +
                       std::to_string(lo) + ".." + std::to_string(hi));
  }
}

bool is_even(const BigInt& v) { return (v & 1) == 0; }

}  // namespace

bool fkw_homeomorphic(const InvariantProfile& a, const InvariantProfile& b) {
  require_same_n(a, b, 4, 7, "fkw_homeomorphic");
  return a.d == b.d && a.p == b.p && a.e == b.e;
}

bool jupp_wall_diffeomorphic(const InvariantProfile& a, const InvariantProfile& b) {
  require_same_n(a, b, 3, 3, "jupp_wall_diffeomorphic");
  return a.d == b.d && a.p.front() == b.p.front() && a.e == b.e;
}

bool dim2_homeo_not_diffeo(const InvariantProfile& a, const InvariantProfile& b) {
  require_same_n(a, b, 2, 2, "dim2_homeo_not_diffeo");
  return a.d_times_p1() == b.d_times_p1() && a.e == b.e && is_even(a.c1() - b.c1()) &&
         a.c1() != b.c1();
}

bool rigidity_excludes_pair(unsigned n, const Multidegree& md) noexcept {
  // r <= (n+2)/2  <=>  2r <= n+2
  return n > 2 && 2 * md.codim() <= static_cast<std::size_t>(n) + 2;
}

ClassificationVerdict classify_profiles(const Multidegree& a, const InvariantProfile& pa,
                                        const Multidegree& b, const InvariantProfile& pb) {
  if (pa.n != pb.n) throw InvalidInput("classify: profiles computed for different dimensions");
  const unsigned n = pa.n;
  if (n < 2 || n > 7) {
    throw InvalidInput("classify: dimension " + std::to_string(n) + " outside 2..7");
  }

  ClassificationVerdict v;
  v.distinct_c1 = pa.c1() != pb.c1();
  if (a == b) {
    v.relation = Relation::kIdenticalMultidegree;
    v.notes = "same multidegree";
    return v;
  }

  auto c1_note = [&] {
    return "c_1 differs (" + to_decimal(pa.c1()) + "/" + to_decimal(pb.c1()) + ")";
  };

  if (n == 2) {
    v.compared = {{"d*p1", pa.d_times_p1(), pb.d_times_p1()}, {"e", pa.e, pb.e}, {"c1", pa.c1(), pb.c1()}};
    if (dim2_homeo_not_diffeo(pa, pb)) {
      v.relation = Relation::kHomeomorphicNotDiffeomorphic;
      v.criterion = Criterion::kExoticDim2;
      v.notes = c1_note() + ", same parity";
    } else if (pa.d_times_p1() == pb.d_times_p1() && pa.e == pb.e) {
      v.relation = Relation::kUndecided;
      v.notes = v.distinct_c1 ? "c_1 parity differs" : "c_1 equal";
    } else {
      v.relation = Relation::kInvariantsDiffer;
    }
    return v;
  }

  v.compared = {{"d", pa.d, pb.d}};
  for (std::size_t k = 0; k < pa.p.size(); ++k) {
    v.compared.push_back({"p" + std::to_string(k + 1), pa.p[k], pb.p[k]});
  }
  v.compared.push_back({"e", pa.e, pb.e});
  v.compared.push_back({"c1", pa.c1(), pb.c1()});

  if (n == 3) {
    if (jupp_wall_diffeomorphic(pa, pb)) {
      v.relation = Relation::kDiffeomorphic;
      v.criterion = Criterion::kJuppWall;
      v.notes = v.distinct_c1 ? c1_note() + ": disconnected moduli space witness" : "c_1 equal";
    } else {
      v.relation = Relation::kInvariantsDiffer;
    }
    return v;
  }

  if (!fkw_homeomorphic(pa, pb)) {
    v.relation = Relation::kInvariantsDiffer;
    return v;
  }
  v.relation = Relation::kHomeomorphic;
  v.criterion = Criterion::kFangKlausWang;

  const Factorization f = factorize_multidegree(a);
  std::ostringstream why;
  bool first = true;
  for (const auto& t : traving_thresholds(n)) {
    if (!first) why << ", ";
    first = false;
    why << "nu_" << t.p << "(d)=" << padic_valuation(f, t.p) << " vs " << to_decimal(t.threshold);
  }
  if (traving_condition(n, f)) {
    v.relation = Relation::kDiffeomorphic;
    v.criterion = Criterion::kTraving;
    v.notes = why.str();
  } else {
    v.notes = "valuation bound not met: " + why.str();
  }
  if (v.distinct_c1) v.notes += "; " + c1_note();
  return v;
}

ClassificationVerdict classify_pair(unsigned n, const Multidegree& a, const Multidegree& b) {
  if (n < 2 || n > 7) {
    throw InvalidInput("classify: dimension " + std::to_string(n) + " outside 2..7");
  }
  return classify_profiles(a, profile(n, a), b, profile(n, b));
}

std::string verdict_to_text(const ClassificationVerdict& v) {
  std::ostringstream out;
  out << to_string(v.relation);
  if (v.criterion != Criterion::kNone) out << " [" << to_string(v.criterion) << "]";
  if (!v.notes.empty()) out << "; " << v.notes;
  out << '\n';
  for (const auto& c : v.compared) {
    out << "  " << c.name << ": " << c.a << " | " << c.b << (c.a == c.b ? "" : "  (differs)") << '\n';
  }
  return out.str();
}

}  // namespace cinv
