#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace isograss {

/// Finitely supported integer power series in one formal variable x, used for
/// Poincaré polynomials. Coefficients are signed so that intermediate
/// products of (1 - x^d) factors can be represented; a genuine Poincaré
/// polynomial has only non-negative entries.
class PoincareSeries {
 public:
  PoincareSeries() = default;
  explicit PoincareSeries(std::vector<std::int64_t> coefficients);

  static PoincareSeries one() { return PoincareSeries({1}); }
  /// 1 + x^d
  static PoincareSeries exterior(int d);

  std::int64_t coefficient(int d) const;
  std::span<const std::int64_t> coefficients() const { return coeffs_; }
  /// Highest degree with a nonzero coefficient, -1 for the zero series.
  int top_degree() const;
  bool is_nonnegative() const;
  bool is_palindromic(int top) const;
  std::int64_t value_at_one() const;

  /// Drops every term above max_degree.
  PoincareSeries truncated(int max_degree) const;

  friend PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b);
  bool operator==(const PoincareSeries& other) const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// `1 + x^2 + 2*x^4`.
std::string render(const PoincareSeries& s);

/// Truncation to max_degree of prod(1 - x^r) / prod(1 - x^g) over relation
/// degrees r and generator degrees g, in exact (overflow-checked) integer
/// power-series arithmetic.
PoincareSeries complete_intersection_series(std::span<const int> generator_degrees,
                                            std::span<const int> relation_degrees,
                                            int max_degree);

/// Overflow-checked helpers; throw std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace isograss
