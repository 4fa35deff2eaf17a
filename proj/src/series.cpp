#include "isograss/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isograss {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

PoincareSeries::PoincareSeries(std::vector<std::int64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

PoincareSeries PoincareSeries::exterior(int d) {
  if (d < 1) throw std::invalid_argument("exterior degree must be positive");
  std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
  c[0] = 1;
  c[static_cast<std::size_t>(d)] += 1;
  return PoincareSeries(std::move(c));
}

void PoincareSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t PoincareSeries::coefficient(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

int PoincareSeries::top_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool PoincareSeries::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c >= 0; });
}

bool PoincareSeries::is_palindromic(int top) const {
  if (top < top_degree()) return false;
  for (int d = 0; d <= top; ++d)
    if (coefficient(d) != coefficient(top - d)) return false;
  return true;
}

std::int64_t PoincareSeries::value_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

PoincareSeries PoincareSeries::truncated(int max_degree) const {
  std::vector<std::int64_t> c(coeffs_.begin(),
                              coeffs_.begin() + std::min<std::ptrdiff_t>(
                                                    coeffs_.size(), std::max(0, max_degree + 1)));
  return PoincareSeries(std::move(c));
}

PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<std::int64_t> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return PoincareSeries(std::move(r));
}

bool PoincareSeries::operator==(const PoincareSeries& other) const {
  return coeffs_ == other.coeffs_;
}

std::string render(const PoincareSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= s.top_degree(); ++d) {
    auto c = s.coefficient(d);
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const auto mag = c < 0 ? -c : c;
    if (d == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (d > 1) os << '^' << d;
  }
  return first ? "0" : os.str();
}

PoincareSeries complete_intersection_series(std::span<const int> generator_degrees,
                                            std::span<const int> relation_degrees,
                                            int max_degree) {
  if (max_degree < 0) return {};
  const auto len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<std::int64_t> s(len, 0);
  s[0] = 1;
  // Divide by each (1 - x^g): running prefix sums with stride g.
  for (int g : generator_degrees) {
    if (g < 1) throw std::invalid_argument("generator degree must be positive");
    for (std::size_t i = static_cast<std::size_t>(g); i < len; ++i)
      s[i] = checked_add(s[i], s[i - static_cast<std::size_t>(g)]);
  }
  for (int r : relation_degrees) {
    if (r < 1) throw std::invalid_argument("relation degree must be positive");
    for (std::size_t i = len; i-- > static_cast<std::size_t>(r);)
      s[i] = checked_add(s[i], -s[i - static_cast<std::size_t>(r)]);
  }
  return PoincareSeries(std::move(s));
}

}  // namespace isograss
