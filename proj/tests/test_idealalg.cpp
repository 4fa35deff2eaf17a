#include "isograss/idealalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace isograss;

namespace {

struct EC2 {
  AlphabetPtr a = make_alphabet({{"e", 2}, {"c2", 4}});
  GradedPoly e = GradedPoly::generator(a, "e");
  GradedPoly c2 = GradedPoly::generator(a, "c2");
  HomogeneousIdeal ideal{a, {c2 + e * e, e * e * c2}};
  QuotientRing q{ideal};
};

std::vector<std::int64_t> coeffs(const PoincareSeries& s) {
  return {s.coefficients().begin(), s.coefficients().end()};
}

}  // namespace

TEST_CASE("ideal validation") {
  EC2 r;
  CHECK_THROWS_AS(HomogeneousIdeal(r.a, {GradedPoly(r.a)}), std::invalid_argument);
  CHECK_THROWS_AS(HomogeneousIdeal(r.a, {r.e + r.c2}), std::invalid_argument);
  auto other = make_alphabet({{"p1", 4}});
  CHECK_THROWS_AS(HomogeneousIdeal(r.a, {GradedPoly::generator(other, "p1")}), std::invalid_argument);
}

TEST_CASE("slice_rank") {
  EC2 r;
  CHECK(slice_rank(r.ideal, 4) == 1);
  CHECK(slice_rank(r.ideal, 2) == 0);
  CHECK(slice_rank(r.ideal, 0) == 0);
  // e^4 + e^2 c2, c2^2 + e^2 c2 and e^2 c2 are independent over the basis
  // {e^4, e^2 c2, c2^2}.
  CHECK(slice_rank(r.ideal, 8) == 3);
  for (int d = 0; d <= 16; ++d) CHECK(slice_rank(r.ideal, d) == oracle::slice_rank(*r.a, r.ideal.relations(), d));
}

TEST_CASE("slice_rank agrees with dense elimination on random ideals") {
  auto a = make_alphabet({{"p1", 4}, {"e", 2}, {"c2", 4}});
  std::mt19937 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<GradedPoly> rels;
    for (int i = 0; i < 2; ++i) {
      auto r = oracle::random_homogeneous(a, 4 + 2 * ((trial + i) % 3), rng);
      if (!r.is_zero()) rels.push_back(r);
    }
    if (rels.empty()) continue;
    HomogeneousIdeal ideal(a, rels);
    for (int d = 0; d <= 12; d += 2) CHECK(slice_rank(ideal, d) == oracle::slice_rank(*a, rels, d));
  }
}

TEST_CASE("normal_form") {
  EC2 r;
  CHECK(r.q.normal_form(r.c2) == -(r.e * r.e));
  CHECK(r.q.normal_form(pow(r.e, 4)).is_zero());
  CHECK(r.q.contains(pow(r.e, 4)));
  CHECK(r.q.normal_form(GradedPoly::constant(r.a, 1)) == GradedPoly::constant(r.a, 1));
  CHECK_FALSE(r.q.contains(pow(r.e, 3)));
}

TEST_CASE("graded_dimension and poincare_polynomial") {
  EC2 r;
  const std::vector<std::size_t> dims{1, 1, 1, 1, 0};
  for (int i = 0; i < 5; ++i) CHECK(r.q.graded_dimension(2 * i) == dims[static_cast<std::size_t>(i)]);
  CHECK(r.q.graded_dimension(3) == 0);
  CHECK(render(poincare_polynomial(r.q, 8)) == "1 + x^2 + x^4 + x^6");

  auto p = make_alphabet({{"p1", 4}});
  QuotientRing free_ring(HomogeneousIdeal(p, {}));
  for (int k = 0; k <= 5; ++k) CHECK(free_ring.graded_dimension(4 * k) == 1);
  CHECK(render(poincare_polynomial(free_ring, 12)) == "1 + x^4 + x^8 + x^12");
  const auto p1 = GradedPoly::generator(p, "p1");
  QuotientRing trunc(HomogeneousIdeal(p, {p1 * p1}));
  CHECK(render(poincare_polynomial(trunc, 8)) == "1 + x^4");
  CHECK(trunc.graded_dimension(0) == 1);
}

TEST_CASE("height") {
  auto a = make_alphabet({{"e", 2}});
  const auto e = GradedPoly::generator(a, "e");
  QuotientRing q(HomogeneousIdeal(a, {pow(e, 4)}));
  CHECK(height(q, e, 10) == 3u);
  CHECK(height(q, e * e, 10) == 1u);
  CHECK(height(q, GradedPoly(a), 10) == 0u);
  CHECK_FALSE(height(q, e, 2).has_value());
  QuotientRing free_ring(HomogeneousIdeal(a, {}));
  CHECK_FALSE(height(free_ring, e, 20).has_value());
  CHECK_THROWS_AS(height(q, GradedPoly::constant(a, 1), 5), std::invalid_argument);
  CHECK(default_height_cap(11, 4) == 3u);

  std::mt19937 rng(3);
  EC2 r;
  for (int i = 0; i < 20; ++i) {
    const auto x = oracle::random_homogeneous(r.a, 2 * (1 + i % 3), rng);
    if (x.is_zero()) continue;
    const auto h = height(r.q, x, 20);
    CHECK(height(r.q, x * Rational(-7, 2), 20) == h);
    CHECK(height(r.q, x * Rational(3), 20) == h);
  }
}

TEST_CASE("complete_intersection_series") {
  const std::vector<int> g1{2, 4}, r1{4, 8};
  CHECK(render(complete_intersection_series(g1, r1, 8)) == "1 + x^2 + x^4 + x^6");
  const std::vector<int> g2{4}, r2{8};
  CHECK(render(complete_intersection_series(g2, r2, 8)) == "1 + x^4");
  CHECK(complete_intersection_series({}, {}, 5) == PoincareSeries::one());

  const std::vector<int> g3{4, 2, 8, 4, 8}, r3{4, 8, 12, 16};
  CHECK(coeffs(complete_intersection_series(g3, r3, 40)) ==
        [&] {
          auto v = oracle::ci_series(g3, r3, 40);
          while (!v.empty() && v.back() == 0) v.pop_back();
          return v;
        }());
}

TEST_CASE("normal form laws") {
  EC2 r;
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 * (i % 6);
    const auto x = oracle::random_homogeneous(r.a, d, rng), y = oracle::random_homogeneous(r.a, d, rng);
    const Rational al(i % 5 - 2, 3), be(7, i % 4 + 1);
    CHECK(r.q.normal_form(x * al + y * be) == r.q.normal_form(x) * al + r.q.normal_form(y) * be);
    const auto nf = r.q.normal_form(x);
    CHECK(r.q.normal_form(nf) == nf);
    CHECK(r.q.contains(x - nf));
    const auto std_mons = r.q.standard_monomials(d);
    for (const auto& [m, c] : nf.terms())
      CHECK(std::find(std_mons.begin(), std_mons.end(), m) != std_mons.end());
  }
  for (const auto& rel : r.ideal.relations())
    for (int d = 0; d <= 12; d += 2)
      for (const auto& m : monomials_of_degree(*r.a, d))
        CHECK(r.q.normal_form(GradedPoly::monomial(r.a, m) * rel).is_zero());
}

TEST_CASE("graded_dimension is monomials minus slice rank") {
  auto a = make_alphabet({{"p1", 4}, {"e", 2}, {"c2", 4}});
  const auto p1 = GradedPoly::generator(a, "p1"), e = GradedPoly::generator(a, "e"),
             c2 = GradedPoly::generator(a, "c2");
  QuotientRing q(HomogeneousIdeal(a, {c2 + p1 + e * e, p1 * c2, pow(e, 4)}));
  for (int d = 0; d <= 20; ++d)
    CHECK(q.graded_dimension(d) ==
          monomials_of_degree(*a, d).size() - oracle::slice_rank(*a, q.ideal().relations(), d));
}
