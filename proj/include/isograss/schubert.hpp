// Schubert calculus on the complex Grassmannian of k-planes in C^{k+w}.
//
// H*(CG) has the additive basis sigma_lambda for partitions lambda fitting a
// k x w box, with sigma_lambda in topological degree 2|lambda|. Products with
// the special classes sigma_r follow the Pieri rule. This module shares no
// code with the polynomial/ideal machinery and serves as its oracle.

#pragma once

#include "isograss/polyring.hpp"
#include "isograss/series.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace isograss::schubert {

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  bool fits_in_box(int rows, int width) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct Box {
  int rows = 0;
  int width = 0;
};

class SchubertElement {
 public:
  explicit SchubertElement(Box box) : box_(box) {}
  static SchubertElement basis(Box box, Partition lambda);

  Box box() const { return box_; }
  const std::map<Partition, Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(const Partition& lambda) const;
  /// Adds c*sigma_lambda; partitions outside the box are discarded.
  void add(const Partition& lambda, const Rational& c);

  bool operator==(const SchubertElement& other) const { return coeffs_ == other.coeffs_; }

 private:
  Box box_;
  std::map<Partition, Rational> coeffs_;
};

/// Partitions in the box grouped by size; within a size, decreasing
/// lexicographic order: box (2,2) gives (), (1), (2), (1,1), (2,1), (2,2).
std::vector<Partition> partitions_in_box(int rows, int width);

/// x * sigma_r: every sigma_mu with mu/lambda a horizontal strip of size r
/// that still fits the box.
SchubertElement pieri(const SchubertElement& x, int r);

/// Largest t with sigma_1^t != 0; equals rows * width.
int sigma1_height(Box box);

struct BettiAndEuler {
  PoincareSeries series;  // topological degrees, coefficient of x^{2j}
  std::int64_t euler = 0;
};

BettiAndEuler betti_and_euler(Box box);

}  // namespace isograss::schubert
