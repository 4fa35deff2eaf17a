// Brouwer-degree obstructions between equal-dimensional spaces.
//
// A map of nonzero degree between closed oriented manifolds is injective on
// rational cohomology. The verdict engine applies necessary conditions of that
// injectivity in a fixed order and records every comparison it evaluates.

#pragma once

#include "isograss/series.hpp"
#include "isograss/space.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isograss {

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::int64_t source_dim, std::int64_t target_dim);
  std::int64_t source_dim;
  std::int64_t target_dim;
};

/// [k/2][(n-k)/2] for I_{2n,k} with 2 <= k < n, [l/2][(m-l)/2] for the
/// oriented real Grassmannian with 2 <= l <= m-2. Throws std::invalid_argument
/// otherwise.
std::int64_t p1_height_formula(const SpaceId& space);

/// Poincaré polynomial from the known structure of each family: Gaussian
/// binomials for the polynomial part and the sieve's exterior degrees in
/// closed form. Available for isotropic 2 <= k < n, real Grassmannians with
/// odd m, complex Grassmannians and spheres (sphere-equivalent spaces
/// included); nullopt otherwise.
std::optional<PoincareSeries> structural_poincare(const SpaceId& space);

/// Closed form of the sieve's exterior degrees for 2 <= k < n:
/// {2i-1 : i odd, n-k < i <= n} together with {4j-1 : [k/2]+[(n-k)/2] < j <= [n/2]}.
std::vector<int> structural_exterior_degrees(int n, int k);

/// Gaussian binomial [a+b choose a] in q = x^step, as a series in x.
PoincareSeries gaussian_binomial(int a, int b, int step);

enum class VerdictTag { AnyDegreePossible, NoObstructionDetected, ForcedZero };

enum class Criterion {
  SphereTarget,    // target is (equivalent to) a sphere
  Identical,       // same space after normalization
  H1,              // rank H^1(target) > rank H^1(source) obstructs
  H4,              // H^4(target) != 0 while H^4(source) = 0 obstructs
  P1Height,        // f^* p1 = lambda p1 forces equal heights
  CaseAnalysis,    // informational: the inequalities of the case analysis
  DimensionBound,  // informational: k(n-k) + k(k+1)/2 against 4
  Betti,           // b_i(target) > b_i(source) for some i obstructs
};

std::string_view to_string(VerdictTag t);
std::string_view to_string(Criterion c);

struct CriterionCheck {
  Criterion criterion;
  std::vector<std::pair<std::string, std::int64_t>> values;
  bool obstructs = false;
  std::string note;

  std::int64_t value(std::string_view name) const;
};

struct Verdict {
  VerdictTag tag = VerdictTag::NoObstructionDetected;
  std::vector<CriterionCheck> trace;

  /// The deciding check, e.g. `HeightMismatch(1,0)`; empty when nothing
  /// decided.
  std::string reason() const;
};

/// Throws DimensionMismatch when the dimensions differ.
Verdict verdict(const SpaceId& source, const SpaceId& target);

enum class PairFamily { IsoIso, IsoReal, RealIso };

std::string_view to_string(PairFamily f);
std::optional<PairFamily> parse_family(std::string_view name);

struct PairRecord {
  SpaceId source;
  SpaceId target;
  std::int64_t dim = 0;
  Verdict verdict;
};

struct VerdictCounts {
  std::size_t any_degree = 0;
  std::size_t no_obstruction = 0;
  std::size_t forced_zero = 0;
  /// Distinct pairs whose p1-heights are defined and equal.
  std::size_t equal_height_distinct = 0;
};

struct Enumeration {
  PairFamily family;
  int bound = 0;
  std::vector<PairRecord> pairs;
  VerdictCounts counts;
};

/// Isotropic spaces range over 2 <= k <= n <= bound, oriented real
/// Grassmannians over 2 <= l <= m-2, m <= bound (spheres excluded). Ordered
/// pairs of distinct spaces with equal dimension, sorted.
Enumeration enumerate_equal_dim_pairs(PairFamily family, int bound);

struct ArithTuple {
  int n = 0, k = 0, m = 0, l = 0;
  std::int64_t dim = 0;
  std::int64_t height = 0;
  std::int64_t kk_minus_ll = 0;  // k(n-k) - l(m-l)
  std::int64_t product = 0;      // (k-l)(k+l+1)
  bool within_four = false;      // |k(n-k) - l(m-l)| <= 4
  bool divisible_by_four = false;
  bool within_sixteen = false;   // |(k-l)(k+l+1)| <= 16
  bool same_space = false;
};

struct Theorem41Report {
  int bound = 0;
  /// Every (n,k),(m,l) with 2 <= k < n <= bound, 2 <= l < m <= bound, equal
  /// dimension and equal p1-height, both orderings.
  std::vector<ArithTuple> tuples;
  /// Tuples where some asserted step fails.
  std::vector<ArithTuple> violations;
  /// (k-l)(k+l+1) for k = l+2 is never divisible by 4.
  bool k_plus_two_rejected = true;
  /// For k = l+1 divisibility by 4 holds exactly when l is odd.
  bool k_plus_one_parity = true;

  bool ok() const { return violations.empty() && k_plus_two_rejected && k_plus_one_parity; }
};

Theorem41Report theorem41_arith_check(int bound);

/// k = l+1 with l in {3,5,7}: the equal-dimension solutions (m(s), n(s)) and
/// the two sides of the height equation.
struct CaseFamily {
  int l = 3;
  int k() const { return l + 1; }
  int m(int s) const;
  int n(int s) const;
  std::int64_t lhs(int s) const;
  std::int64_t rhs(int s) const;
};

struct CaseFamilyReport {
  int l = 0;
  int s_max = 0;
  bool dimension_identity_holds = true;
  bool heights_always_differ = true;
  std::int64_t lhs_at_1 = 0;
  std::int64_t rhs_at_1 = 0;
  std::vector<int> failures;  // values of s that break either property

  bool ok() const { return dimension_identity_holds && heights_always_differ; }
};

CaseFamilyReport case_family_check(const CaseFamily& family, int s_max);

struct Theorem42Report {
  int bound = 0;
  std::int64_t minimum = 0;
  int argmin_n = 0;
  int argmin_k = 0;
  bool monotone_in_n = true;
  bool ok() const { return minimum > 4 && monotone_in_n; }
};

/// k(n-k) + k(k+1)/2 over 2 <= k < n <= bound.
Theorem42Report theorem42_bound_check(int bound);

}  // namespace isograss
