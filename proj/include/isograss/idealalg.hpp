// Exact linear algebra on graded slices of homogeneous ideals.
//
// The degree-d slice of an ideal is spanned by m*r for every relation r and
// every monomial m with deg(m*r) = d. Each slice is row-reduced over Q with
// columns ordered from the largest monomial down, so the pivot of every row is
// its largest monomial. Non-pivot monomials are the standard monomials of the
// quotient and normal forms are expressed in them.

#pragma once

#include "isograss/polyring.hpp"
#include "isograss/series.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace isograss {

class HomogeneousIdeal {
 public:
  /// Throws std::invalid_argument when a relation is zero, inhomogeneous or
  /// over a different alphabet.
  HomogeneousIdeal(AlphabetPtr alphabet, std::vector<GradedPoly> relations);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<GradedPoly>& relations() const { return relations_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<GradedPoly> relations_;
};

/// (column, coefficient) pairs with increasing columns and no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Reduced row echelon form of one ideal slice.
struct SliceEchelon {
  int degree = 0;
  std::vector<Monomial> columns;  // descending
  std::map<Monomial, std::size_t> column_index;
  std::vector<SparseRow> rows;      // RREF, pivot coefficient 1
  std::vector<std::size_t> pivots;  // pivot column of each row, increasing

  std::size_t rank() const { return rows.size(); }
  bool is_pivot(std::size_t column) const;
};

SliceEchelon slice_echelon(const HomogeneousIdeal& ideal, int d);
std::size_t slice_rank(const HomogeneousIdeal& ideal, int d);

class QuotientRing {
 public:
  explicit QuotientRing(HomogeneousIdeal ideal, std::optional<int> top_degree_hint = std::nullopt);

  const HomogeneousIdeal& ideal() const { return ideal_; }
  const AlphabetPtr& alphabet() const { return ideal_.alphabet(); }
  std::optional<int> top_degree_hint() const { return top_degree_hint_; }

  /// Residue of x in the span of standard monomials, degree by degree.
  GradedPoly normal_form(const GradedPoly& x) const;
  bool contains(const GradedPoly& x) const { return normal_form(x).is_zero(); }
  std::size_t graded_dimension(int d) const;
  std::vector<Monomial> standard_monomials(int d) const;

  /// Slices are memoized; the cache is shared between copies and guarded so
  /// concurrent readers are safe.
  const SliceEchelon& slice(int d) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<const SliceEchelon>> slices;
  };

  HomogeneousIdeal ideal_;
  std::optional<int> top_degree_hint_;
  std::shared_ptr<Cache> cache_;
};

/// Largest t <= cap with nf(x^t) != 0 (0 when nf(x) = 0). Returns nullopt
/// (overflow) when x^cap is still nonzero. x must be homogeneous of positive
/// degree.
std::optional<std::size_t> height(const QuotientRing& q, const GradedPoly& x, std::size_t cap);

/// dim / deg(x) + 1: the quotient vanishes above `top_degree`, so this power
/// of x is always zero.
std::size_t default_height_cap(int top_degree, int element_degree);

/// Sum over d <= max_degree of graded_dimension(d) x^d.
PoincareSeries poincare_polynomial(const QuotientRing& q, int max_degree);

/// Highest degree <= search_limit with a nonzero graded piece.
int quotient_top_degree(const QuotientRing& q, int search_limit);

}  // namespace isograss
