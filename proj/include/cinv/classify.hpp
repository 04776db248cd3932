#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cinv/bigint.hpp"
#include "cinv/factorization.hpp"
#include "cinv/invariants.hpp"
#include "cinv/multidegree.hpp"

namespace cinv {

enum class Relation {
  kIdenticalMultidegree,
  kDiffeomorphic,
  kHomeomorphic,
  kHomeomorphicNotDiffeomorphic,
  kInvariantsDiffer,
  kUndecided,
};

enum class Criterion {
  kNone,
  kExoticDim2,      // d*p1, e, c1 parity agree and c1 differs
  kJuppWall,        // n = 3: d, p1, e
  kFangKlausWang,   // n = 4..7: d, all p_k, e
  kTraving,         // FKW plus the valuation bound on d
};

std::string_view to_string(Relation r) noexcept;
std::string_view to_string(Criterion c) noexcept;

struct ComparedValue {
  std::string name;
  BigInt a;
  BigInt b;
};

struct ClassificationVerdict {
  Relation relation = Relation::kUndecided;
  Criterion criterion = Criterion::kNone;
  bool distinct_c1 = false;
  std::string notes;
  std::vector<ComparedValue> compared;
};

struct TravingThreshold {
  std::uint64_t p = 0;
  BigRat threshold;  // (2n+1)/(2(p-1)) + 1
};

/// One entry per prime p with p(p-1) <= n+1.
std::vector<TravingThreshold> traving_thresholds(unsigned n);

/// nu_p(d) >= threshold for every qualifying prime. Requires n > 2.
bool traving_condition(unsigned n, const Factorization& f);

/// Requires a.n == b.n in 4..7.
bool fkw_homeomorphic(const InvariantProfile& a, const InvariantProfile& b);

/// Requires both profiles at n = 3. c_1 is not compared.
bool jupp_wall_diffeomorphic(const InvariantProfile& a, const InvariantProfile& b);

/// Sufficient conditions for homeomorphic, non-diffeomorphic surfaces.
/// Total degrees may differ.
bool dim2_homeo_not_diffeo(const InvariantProfile& a, const InvariantProfile& b);

/// n > 2 and r <= (n+2)/2: the total degree and Pontrjagin classes pin down
/// the multidegree, so such a candidate has no nontrivial partner of the same kind.
bool rigidity_excludes_pair(unsigned n, const Multidegree& md) noexcept;

/// Dispatches to the criterion for n. Requires 2 <= n <= 7.
ClassificationVerdict classify_pair(unsigned n, const Multidegree& a, const Multidegree& b);

/// Variant taking precomputed profiles (both at the same n).
ClassificationVerdict classify_profiles(const Multidegree& a, const InvariantProfile& pa,
                                        const Multidegree& b, const InvariantProfile& pb);

std::string verdict_to_text(const ClassificationVerdict& v);

}  // namespace cinv
