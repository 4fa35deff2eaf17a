#include "isograss/schubert.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace isograss::schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits_in_box(int rows, int width) const {
  return length() <= rows && (parts_.empty() || parts_.front() <= width);
}

SchubertElement SchubertElement::basis(Box box, Partition lambda) {
  SchubertElement x(box);
  x.add(lambda, 1);
  return x;
}

Rational SchubertElement::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void SchubertElement::add(const Partition& lambda, const Rational& c) {
  if (c == 0 || !lambda.fits_in_box(box_.rows, box_.width)) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::vector<Partition> partitions_in_box(int rows, int width) {
  if (rows < 0 || width < 0) throw std::invalid_argument("box dimensions must be >= 0");
  std::vector<Partition> out;
  std::vector<int> parts;
  // Parts are chosen largest first, so each size comes out lexicographically
  // decreasing.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == rows) return;
    for (int p = std::min(cap, remaining); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  for (int size = 0; size <= rows * width; ++size) rec(size, width);
  return out;
}

SchubertElement pieri(const SchubertElement& x, int r) {
  if (r < 1) throw std::invalid_argument("pieri needs r >= 1");
  const Box box = x.box();
  SchubertElement out(box);
  for (const auto& [lambda, c] : x.coefficients()) {
    // mu_i ranges over [lambda_i, min(width, lambda_{i-1})], total growth r.
    std::vector<int> mu;
    std::function<void(int, int)> rec = [&](int row, int left) {
      if (row == box.rows) {
        if (left != 0) return;
        std::vector<int> parts;
        for (int p : mu)
          if (p > 0) parts.push_back(p);
        out.add(Partition(std::move(parts)), c);
        return;
      }
      const int lo = lambda.part(row);
      const int hi = std::min(box.width, row == 0 ? box.width : lambda.part(row - 1));
      for (int v = lo; v <= hi && v - lo <= left; ++v) {
        mu.push_back(v);
        rec(row + 1, left - (v - lo));
        mu.pop_back();
      }
    };
    rec(0, r);
  }
  return out;
}

int sigma1_height(Box box) {
  if (box.rows < 0 || box.width < 0) throw std::invalid_argument("box dimensions must be >= 0");
  SchubertElement x = SchubertElement::basis(box, Partition{});
  int t = 0;
  while (true) {
    x = pieri(x, 1);
    if (x.is_zero()) return t;
    ++t;
  }
}

BettiAndEuler betti_and_euler(Box box) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(2 * box.rows * box.width) + 1, 0);
  std::int64_t total = 0;
  for (const auto& p : partitions_in_box(box.rows, box.width)) {
    c[static_cast<std::size_t>(2 * p.size())] += 1;
    ++total;
  }
  return {PoincareSeries(std::move(c)), total};
}

}  // namespace isograss::schubert
