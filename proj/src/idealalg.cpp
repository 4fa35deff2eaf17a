#include "isograss/idealalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace isograss {

namespace {

// a - f*b for sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -f * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Rational* entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

SparseRow to_row(const GradedPoly& p, const std::map<Monomial, std::size_t>& index) {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) row.emplace_back(index.at(m), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

}  // namespace

bool SliceEchelon::is_pivot(std::size_t column) const {
  return std::binary_search(pivots.begin(), pivots.end(), column);
}

HomogeneousIdeal::HomogeneousIdeal(AlphabetPtr alphabet, std::vector<GradedPoly> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  for (const auto& r : relations_) {
    if (!same_alphabet(r.alphabet(), alphabet_))
      throw std::invalid_argument("relation over a different alphabet");
    if (r.is_zero()) throw std::invalid_argument("zero relation");
    if (!r.homogeneous_degree()) throw std::invalid_argument("inhomogeneous relation " + render(r));
  }
}

SliceEchelon slice_echelon(const HomogeneousIdeal& ideal, int d) {
  SliceEchelon ech;
  ech.degree = d;
  ech.columns = monomials_of_degree(*ideal.alphabet(), d);
  std::reverse(ech.columns.begin(), ech.columns.end());
  for (std::size_t i = 0; i < ech.columns.size(); ++i) ech.column_index.emplace(ech.columns[i], i);

  // Row echelon by leading column, then back-substitution.
  std::map<std::size_t, SparseRow> by_pivot;
  for (const auto& r : ideal.relations()) {
    const int dr = *r.homogeneous_degree();
    if (dr > d) continue;
    for (const auto& m : monomials_of_degree(*ideal.alphabet(), d - dr)) {
      SparseRow row = to_row(GradedPoly::monomial(ideal.alphabet(), m) * r, ech.column_index);
      while (!row.empty()) {
        auto it = by_pivot.find(row.front().first);
        if (it == by_pivot.end()) break;
        row = axpy(row, row.front().second, it->second);
      }
      if (row.empty()) continue;
      const Rational lead = row.front().second;
      for (auto& [c, v] : row) v /= lead;
      by_pivot.emplace(row.front().first, std::move(row));
    }
  }

  for (auto it = by_pivot.rbegin(); it != by_pivot.rend(); ++it) {
    SparseRow& row = it->second;
    for (std::size_t k = 1; k < row.size(); ++k) {
      auto other = by_pivot.find(row[k].first);
      if (other == by_pivot.end()) continue;
      row = axpy(row, row[k].second, other->second);
      --k;  // row[k] was eliminated; the next entry slid into position k
    }
  }

  for (auto& [p, row] : by_pivot) {
    ech.pivots.push_back(p);
    ech.rows.push_back(std::move(row));
  }
  return ech;
}

std::size_t slice_rank(const HomogeneousIdeal& ideal, int d) {
  return slice_echelon(ideal, d).rank();
}

QuotientRing::QuotientRing(HomogeneousIdeal ideal, std::optional<int> top_degree_hint)
    : ideal_(std::move(ideal)),
      top_degree_hint_(top_degree_hint),
      cache_(std::make_shared<Cache>()) {}

const SliceEchelon& QuotientRing::slice(int d) const {
  std::lock_guard lock(cache_->mutex);
  auto& slot = cache_->slices[d];
  if (!slot) slot = std::make_unique<const SliceEchelon>(slice_echelon(ideal_, d));
  return *slot;
}

GradedPoly QuotientRing::normal_form(const GradedPoly& x) const {
  if (!same_alphabet(x.alphabet(), alphabet()))
    throw IncompatibleRings("element does not belong to the quotient's alphabet");
  GradedPoly out(alphabet());
  for (int d : x.degrees()) {
    const SliceEchelon& ech = slice(d);
    SparseRow v = to_row(x.homogeneous_part(d), ech.column_index);
    for (std::size_t r = 0; r < ech.rows.size(); ++r) {
      if (const Rational* c = entry(v, ech.pivots[r])) {
        const Rational f = *c;
        v = axpy(v, f, ech.rows[r]);
      }
    }
    for (const auto& [col, c] : v) out.add_term(ech.columns[col], c);
  }
  return out;
}

std::size_t QuotientRing::graded_dimension(int d) const {
  if (d < 0) return 0;
  const SliceEchelon& ech = slice(d);
  return ech.columns.size() - ech.rank();
}

std::vector<Monomial> QuotientRing::standard_monomials(int d) const {
  const SliceEchelon& ech = slice(d);
  std::vector<Monomial> out;
  for (std::size_t c = 0; c < ech.columns.size(); ++c)
    if (!ech.is_pivot(c)) out.push_back(ech.columns[c]);
  return out;
}

std::optional<std::size_t> height(const QuotientRing& q, const GradedPoly& x, std::size_t cap) {
  const auto deg = x.homogeneous_degree();
  if (x.is_zero()) return 0;
  if (!deg || *deg <= 0)
    throw std::invalid_argument("height needs a homogeneous element of positive degree");
  if (cap == 0) throw std::invalid_argument("height cap must be positive");
  GradedPoly power = q.normal_form(x);
  if (power.is_zero()) return 0;
  for (std::size_t t = 2; t <= cap; ++t) {
    power = q.normal_form(power * x);
    if (power.is_zero()) return t - 1;
  }
  return std::nullopt;
}

std::size_t default_height_cap(int top_degree, int element_degree) {
  if (element_degree <= 0) throw std::invalid_argument("element degree must be positive");
  return static_cast<std::size_t>(std::max(top_degree, 0) / element_degree) + 1;
}

PoincareSeries poincare_polynomial(const QuotientRing& q, int max_degree) {
  std::vector<std::int64_t> c;
  for (int d = 0; d <= max_degree; ++d) c.push_back(static_cast<std::int64_t>(q.graded_dimension(d)));
  return PoincareSeries(std::move(c));
}

int quotient_top_degree(const QuotientRing& q, int search_limit) {
  for (int d = search_limit; d >= 0; --d)
    if (q.graded_dimension(d) > 0) return d;
  return -1;
}

}  // namespace isograss
