#include "isograss/presentations.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace isograss;

namespace {

std::vector<std::string> rendered(const std::vector<GradedPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(render(p));
  return out;
}

using Strings = std::vector<std::string>;
using Ints = std::vector<int>;

std::vector<int> degrees_of(const GeneratorAlphabet& a) {
  std::vector<int> d;
  for (const auto& g : a.entries()) d.push_back(g.degree);
  return d;
}

}  // namespace

TEST_CASE("differential") {
  CHECK(render(differential(1, 5, 3)) == "c1");
  CHECK(render(differential(1, 4, 2)) == "c1");
  CHECK(render(differential(2, 5, 3)) == "c2 + p1");
  CHECK(render(differential(2, 6, 2)) == "c2 + e^2");
  CHECK(render(differential(4, 5, 3)) == "p1*c2");
  CHECK(differential(5, 5, 3).is_zero());
  CHECK_THROWS(differential(0, 5, 3));
  CHECK_THROWS(differential(6, 5, 3));
}

TEST_CASE("survivor_sieve examples") {
  auto s = survivor_sieve(5, 3);
  CHECK(rendered(s.relations) == Strings{"c1", "c2 + p1", "p1*c2"});
  CHECK(s.exterior == Ints{5, 9});
  s = survivor_sieve(4, 2);
  CHECK(rendered(s.relations) == Strings{"c1", "c2 + e^2", "e^2*c2"});
  CHECK(s.exterior == Ints{5});
  s = survivor_sieve(6, 3);
  CHECK(rendered(s.relations) == Strings{"c1", "c2 + p1", "c3 + p1*c1", "p1*c2"});
  CHECK(s.exterior == Ints{9, 11});
}

TEST_CASE("sieve trace bookkeeping") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 2; k < n; ++k) {
      const auto s = survivor_sieve(n, k);
      REQUIRE(s.trace.steps.size() == static_cast<std::size_t>(n));
      std::size_t rel = 0;
      Ints ext;
      for (std::size_t i = 0; i < s.trace.steps.size(); ++i) {
        const auto& st = s.trace.steps[i];
        CHECK(st.index == static_cast<int>(i) + 1);
        CHECK((st.outcome == SieveOutcome::Survivor) == st.reduction.is_zero());
        CHECK(st.differential == differential(st.index, n, k));
        if (st.outcome == SieveOutcome::Survivor) {
          ext.push_back(2 * st.index - 1);
        } else {
          REQUIRE(rel < s.relations.size());
          CHECK(s.relations[rel++] == st.differential);
        }
        if (st.outcome == SieveOutcome::ConsumedEliminator) CHECK(st.index % 2 == 1);
      }
      CHECK(rel == s.relations.size());
      CHECK(ext == s.exterior);
      for (int d : s.exterior) CHECK(d >= 2 * (n - k) + 1);
    }
}

TEST_CASE("build_quotient_A examples") {
  auto a = build_quotient_A(5, 3);
  CHECK(a.alphabet()->size() == 2);
  CHECK(rendered(a.relations()) == Strings{"c2 + p1", "p1*c2"});
  CHECK(render(poincare_polynomial(a.quotient(), 12)) == "1 + x^4");

  a = build_quotient_A(4, 2);
  CHECK(rendered(a.relations()) == Strings{"c2 + e^2", "e^2*c2"});
  CHECK(render(poincare_polynomial(a.quotient(), 12)) == "1 + x^2 + x^4 + x^6");

  a = build_quotient_A(5, 4);
  const auto p1 = *a.named_element("p1");
  const auto e = *a.named_element("e");
  CHECK(a.quotient().contains(p1));
  CHECK(a.quotient().contains(e * e));
  CHECK(render(poincare_polynomial(a.quotient(), 16)) == "1 + x^4");
}

TEST_CASE("build_full_isotropic examples") {
  auto p = build_full_isotropic(4, 2);
  CHECK(p.exterior_degrees() == Ints{5});
  const PoincareSeries expect = PoincareSeries({1, 0, 1, 0, 1, 0, 1}) * PoincareSeries::exterior(5);
  CHECK(p.poincare() == expect);
  CHECK(p.top_degree() == 11);

  p = build_full_isotropic(5, 3);
  CHECK(p.exterior_degrees() == Ints{5, 9});
  CHECK(p.quotient_top_degree() == 4);
  CHECK(p.top_degree() == 18);

  p = build_full_isotropic(4, 3);
  CHECK(p.quotient_top_degree() == 0);
  CHECK(p.exterior_degrees() == Ints{5, 7});
  CHECK(p.top_degree() == 12);
  CHECK(render(p.poincare()) == "1 + x^5 + x^7 + x^12");

  CHECK_THROWS_AS(build_full_isotropic(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_full_isotropic(4, 1), std::invalid_argument);
}

TEST_CASE("build_real_oriented_odd examples") {
  auto r = build_real_oriented_odd(5, 2);
  CHECK(rendered(r.relations()) == Strings{"p1' + e^2", "e^2*p1'"});
  CHECK(render(r.poincare()) == "1 + x^2 + x^4 + x^6");
  CHECK(r.exterior_degrees().empty());

  auto s = presentation_for(real_oriented(5, 4));
  CHECK(std::holds_alternative<RealOriented>(s.space()));
  CHECK(s.alphabet()->size() == 1);
  CHECK((*s.alphabet())[0].degree == 4);
  CHECK(render(s.poincare()) == "1 + x^4");

  r = build_real_oriented_odd(7, 2);
  const auto ps = r.poincare();
  CHECK(ps.top_degree() == 10);
  CHECK(ps.is_palindromic(10));

  CHECK_THROWS_AS(build_real_oriented_odd(6, 2), UnsupportedSpace);
  CHECK_THROWS_AS(presentation_for(real_oriented(8, 3)), UnsupportedSpace);
  CHECK_THROWS_AS(presentation_for(isotropic(3, 3)), UnsupportedSpace);
  CHECK_THROWS_AS(presentation_for(complex_grass(4, 2)), UnsupportedSpace);
}

TEST_CASE("real Grassmannians with odd ambient dimension satisfy duality") {
  for (int m = 5; m <= 11; m += 2)
    for (int l = 2; l <= m - 2; ++l) {
      const auto r = build_real_oriented_odd(m, l);
      const auto s = r.poincare();
      CHECK(s.top_degree() == l * (m - l));
      CHECK(s.is_palindromic(s.top_degree()));
      // p1, plus the Euler class when the even-rank bundle has rank 4.
      CHECK(r.quotient().graded_dimension(4) == ((l == 4 || m - l == 4) ? 2u : 1u));
    }
}

TEST_CASE("spheres") {
  CHECK(render(build_sphere(3).poincare()) == "1 + x^3");
  CHECK(render(build_sphere(4).poincare()) == "1 + x^4");
  CHECK(render(presentation_for(isotropic(3, 1)).poincare()) == "1 + x^5");
}

TEST_CASE("fact sheets") {
  for (int n = 3; n <= 6; ++n) {
    const auto f = fact_sheet(isotropic(n, n));
    CHECK(f.h1_rank == 1);
    CHECK(f.h4_rank == 0);
  }
  for (int n = 3; n <= 8; ++n)
    for (int k = 2; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto f = fact_sheet(isotropic(n, k));
      const auto p = build_full_isotropic(n, k);
      std::vector<int> degs;
      for (const auto& g : p.alphabet()->entries()) degs.push_back(g.degree);
      const auto h4 = oracle::exponent_vectors(degs, 4).size() - oracle::slice_rank(*p.alphabet(), p.relations(), 4);
      CHECK(f.h1_rank == 0);
      CHECK(static_cast<std::size_t>(f.h4_rank) == h4);
      if (n - k >= 2) CHECK(f.h4_generator_name == "p1");
      CHECK(f.unoriented_companion_orientable == (k % 2 == 1));
      CHECK_FALSE(f.sphere_equivalent.has_value());
    }
  CHECK(fact_sheet(isotropic(4, 1)).sphere_equivalent == Sphere{7});
  CHECK(fact_sheet(isotropic(2, 2)).h1_rank == 1);
  CHECK(fact_sheet(real_oriented(8, 7)).sphere_equivalent == Sphere{7});
  CHECK(fact_sheet(real_oriented(8, 1)).sphere_equivalent == Sphere{7});
  CHECK_FALSE(fact_sheet(real_oriented(8, 3)).sphere_equivalent.has_value());
}

TEST_CASE("remark_exterior_formula") {
  CHECK(remark_exterior_formula(4, 2) == Ints{5});
  CHECK(remark_exterior_formula(6, 3) == Ints{9, 11});
  CHECK(remark_exterior_formula(5, 3) == Ints{5, 7, 9});
  CHECK(survivor_sieve(5, 3).exterior != remark_exterior_formula(5, 3));
}

TEST_CASE("quotient invariants for 2 <= k < n <= 9") {
  for (int n = 3; n <= 9; ++n)
    for (int k = 2; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto full = build_full_isotropic(n, k);
      const auto& q = full.quotient();
      const auto s = full.poincare();
      const std::int64_t dim = oracle::iso_dim(n, k);
      CHECK(s.top_degree() == dim);
      CHECK(s.is_palindromic(static_cast<int>(dim)));
      CHECK(s.value_at_one() ==
            poincare_polynomial(q, full.quotient_top_degree()).value_at_one() << full.exterior_degrees().size());

      // e lives in degree k; p1 vanishes when n - k = 1.
      CHECK(q.graded_dimension(1) == 0);
      CHECK(q.graded_dimension(3) == 0);
      CHECK(q.graded_dimension(2) == (k == 2 ? 1u : 0u));
      CHECK(q.graded_dimension(4) == (n - k >= 2 ? 1u : 0u) + (k == 4 ? 1u : 0u));
      if (k >= 3 && k != 4 && n - k >= 2) CHECK(q.graded_dimension(4) == 1);

      const int top = full.quotient_top_degree();
      for (int d = top + 1; d <= top + 8; ++d) CHECK(q.graded_dimension(d) == 0);

      // Same quotient through the full sieve relation list over the sieve alphabet.
      const auto sieve = survivor_sieve(n, k);
      QuotientRing big(HomogeneousIdeal(sieve.alphabet, sieve.relations));
      for (int d = 0; d <= top + 8; ++d) CHECK(big.graded_dimension(d) == q.graded_dimension(d));

      // Regular sequence: the complete-intersection series matches.
      std::vector<int> rel_degs;
      for (const auto& r : sieve.relations) rel_degs.push_back(*r.homogeneous_degree());
      const auto ci = oracle::ci_series(degrees_of(*sieve.alphabet), rel_degs, top + 8);
      for (int d = 0; d <= top + 8; ++d)
        CHECK(static_cast<std::int64_t>(q.graded_dimension(d)) == ci[static_cast<std::size_t>(d)]);

      if (k % 2 == 0) {
        const auto pm = full.named_element("p" + std::to_string(k / 2));
        REQUIRE(pm.has_value());
        const auto e = *full.named_element("e");
        CHECK(q.contains(*pm - e * e));
      }

      const auto remark = remark_exterior_formula(n, k);
      if (remark == full.exterior_degrees()) CHECK(full.with_exterior(remark).poincare() == s);
    }
}

TEST_CASE("p1 height in the four parametrizations is t(s-t)") {
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= s; ++t)
      for (auto [n, k] : {std::pair{2 * s + 2, 2 * t + 1}, std::pair{2 * s + 1, 2 * t + 1},
                          std::pair{2 * s, 2 * t}, std::pair{2 * s + 1, 2 * t}}) {
        if (k < 2 || k >= n || n > 9) continue;
        CAPTURE(n);
        CAPTURE(k);
        const auto p = build_quotient_A(n, k);
        const auto h = height(p.quotient(), *p.named_element("p1"), 50);
        REQUIRE(h.has_value());
        CHECK(static_cast<int>(*h) == t * (s - t));
      }
}
