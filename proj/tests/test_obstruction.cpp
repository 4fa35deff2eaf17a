#include "isograss/obstruction.hpp"
#include "isograss/presentations.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

using namespace isograss;

namespace {

Verdict run(std::string_view a, std::string_view b) { return verdict(parse_space(a), parse_space(b)); }

bool has_pair(const Enumeration& e, int n, int k, int m, int l, std::int64_t dim) {
  return std::any_of(e.pairs.begin(), e.pairs.end(), [&](const PairRecord& r) {
    return r.source == SpaceId{IsotropicOriented{n, k}} && r.target == SpaceId{IsotropicOriented{m, l}} &&
           r.dim == dim;
  });
}

// Re-derives the numeric claim of an obstructing check from scratch.
bool claim_holds(const SpaceId& s, const SpaceId& t, const CriterionCheck& c) {
  const auto fs = fact_sheet(s), ft = fact_sheet(t);
  switch (c.criterion) {
    case Criterion::H1: return ft.h1_rank > fs.h1_rank && c.value("target_h1") == ft.h1_rank;
    case Criterion::H4: return ft.h4_rank > 0 && fs.h4_rank == 0;
    case Criterion::P1Height: {
      const auto hs = p1_height_formula(s), ht = p1_height_formula(t);
      return hs != ht && c.value("source_height") == hs && c.value("target_height") == ht;
    }
    case Criterion::Betti: {
      const auto ps = structural_poincare(s), pt = structural_poincare(t);
      const int d = static_cast<int>(c.value("degree"));
      return ps && pt && pt->coefficient(d) > ps->coefficient(d);
    }
    default: return false;
  }
}

}  // namespace

TEST_CASE("dimension and height formulas") {
  CHECK(dimension(isotropic(5, 3)) == 18);
  CHECK(dimension(isotropic(5, 4)) == 18);
  CHECK(dimension(isotropic(4, 2)) == 11);
  CHECK(dimension(real_oriented(5, 2)) == 6);
  CHECK(dimension(complex_grass(4, 2)) == 8);
  CHECK(p1_height_formula(isotropic(4, 2)) == 1);
  CHECK(p1_height_formula(isotropic(5, 4)) == 0);
  CHECK(p1_height_formula(isotropic(5, 3)) == 1);
  CHECK(p1_height_formula(real_oriented(7, 2)) == 2);
  CHECK_THROWS_AS(p1_height_formula(isotropic(4, 4)), std::invalid_argument);
  CHECK_THROWS_AS(p1_height_formula(sphere(3)), std::invalid_argument);
  for (int n = 2; n <= 30; ++n)
    for (int k = 1; k <= n; ++k) {
      CHECK(dimension(isotropic(n, k)) == oracle::iso_dim(n, k));
      if (k >= 2 && k < n) CHECK(p1_height_formula(isotropic(n, k)) == oracle::iso_height(n, k));
    }
}

TEST_CASE("verdict examples") {
  auto v = run("I:10,3", "I:10,4");
  CHECK(v.tag == VerdictTag::ForcedZero);
  CHECK(v.reason() == "HeightMismatch(1,0)");

  v = run("I:4,2", "I:4,1");
  CHECK(v.tag == VerdictTag::AnyDegreePossible);
  CHECK(v.reason() == "SphereTarget(3)");

  v = run("I:10,2", "I:10,5");
  CHECK(v.tag == VerdictTag::ForcedZero);
  CHECK(v.reason() == "H1Mismatch(0,1)");

  v = run("I:10,2", "RG:8,3");
  CHECK(v.tag == VerdictTag::ForcedZero);
  CHECK(v.reason() == "HeightMismatch(1,2)");
  std::vector<Criterion> order;
  for (const auto& c : v.trace) order.push_back(c.criterion);
  CHECK(order == std::vector<Criterion>{Criterion::SphereTarget, Criterion::Identical, Criterion::H1,
                                        Criterion::H4, Criterion::P1Height});

  v = run("I:10,3", "I:10,3");
  CHECK(v.tag == VerdictTag::NoObstructionDetected);
  CHECK(v.reason() == "Identical");
  // Complementary real Grassmannians are diffeomorphic and nothing obstructs.
  CHECK(run("RG:8,5", "RG:8,3").tag == VerdictTag::NoObstructionDetected);

  CHECK(run("S:6", "RG:5,2").tag == VerdictTag::ForcedZero);  // H^4 of the target
  CHECK(run("RG:5,2", "S:6").tag == VerdictTag::AnyDegreePossible);
  CHECK(run("RG:7,1", "S:6").reason() == "SphereTarget(6)");

  try {
    run("I:10,3", "I:10,2");
    FAIL("no error");
  } catch (const DimensionMismatch& e) {
    CHECK(e.source_dim == 18);
    CHECK(e.target_dim == 15);
  }
}

TEST_CASE("k = n spaces skip the height criterion") {
  // I:6,3 has dim 6 = dim RG:5,2; H^1 of the target is zero, H^4 of the source is zero.
  const auto v = run("I:6,3", "RG:5,2");
  CHECK(v.tag == VerdictTag::ForcedZero);
  CHECK(v.reason() == "H4Mismatch(0,1)");
  const auto w = run("RG:5,2", "I:6,3");
  CHECK(w.reason() == "H1Mismatch(0,1)");
}

TEST_CASE("equal heights with distinct parameters fall through to Betti numbers") {
  // Both have dimension 84 and p1-height 6.
  const auto v = run("I:22,7", "I:32,3");
  const auto it = std::find_if(v.trace.begin(), v.trace.end(),
                               [](const CriterionCheck& c) { return c.criterion == Criterion::CaseAnalysis; });
  REQUIRE(it != v.trace.end());
  CHECK_FALSE(it->obstructs);
  CHECK(it->value("kk_minus_ll") == 28 - 39);
  CHECK(it->value("within_four") == 0);
  CHECK(v.trace.back().criterion == Criterion::Betti);
}

TEST_CASE("enumeration at bound 12") {
  const auto e = enumerate_equal_dim_pairs(PairFamily::IsoIso, 12);
  CHECK(has_pair(e, 5, 3, 5, 4, 18));
  CHECK(has_pair(e, 10, 2, 7, 5, 35));
  CHECK(has_pair(e, 8, 5, 8, 6, 45));
  CHECK(has_pair(e, 9, 3, 8, 4, 42));
  CHECK(e.counts.equal_height_distinct == 0);
  CHECK(e.counts.no_obstruction == 0);
  CHECK(e.counts.any_degree == 0);
  CHECK(e.counts.forced_zero == e.pairs.size());
  for (const auto& r : e.pairs) {
    CHECK(r.source != r.target);
    CHECK(r.dim == dimension(r.source));
    CHECK(r.dim == dimension(r.target));
  }
  CHECK(std::is_sorted(e.pairs.begin(), e.pairs.end(), [](const PairRecord& a, const PairRecord& b) {
    return std::tie(a.dim, a.source, a.target) < std::tie(b.dim, b.source, b.target);
  }));

  for (auto f : {PairFamily::IsoReal, PairFamily::RealIso}) {
    const auto r = enumerate_equal_dim_pairs(f, 12);
    CHECK_FALSE(r.pairs.empty());
    CHECK(r.counts.forced_zero == r.pairs.size());
  }
  const auto ir = enumerate_equal_dim_pairs(PairFamily::IsoReal, 12);
  CHECK(std::any_of(ir.pairs.begin(), ir.pairs.end(), [](const PairRecord& r) {
    return r.source == SpaceId{IsotropicOriented{5, 2}} && r.target == SpaceId{RealOriented{8, 3}};
  }));
  CHECK_THROWS_AS(enumerate_equal_dim_pairs(PairFamily::IsoIso, 2), std::invalid_argument);
}

TEST_CASE("enumeration against a brute-force dimension table") {
  const int bound = 14;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> expected;
  for (int n = 2; n <= bound; ++n)
    for (int k = 2; k <= n; ++k)
      for (int m = 2; m <= bound; ++m)
        for (int l = 2; l <= m; ++l)
          if ((n != m || k != l) && oracle::iso_dim(n, k) == oracle::iso_dim(m, l)) expected.insert({{n, k}, {m, l}});
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> got;
  for (const auto& r : enumerate_equal_dim_pairs(PairFamily::IsoIso, bound).pairs) {
    const auto s = std::get<IsotropicOriented>(r.source), t = std::get<IsotropicOriented>(r.target);
    got.insert({{s.n, s.k}, {t.n, t.k}});
  }
  CHECK(got == expected);
}

TEST_CASE("symmetry and trace soundness") {
  for (auto f : {PairFamily::IsoIso, PairFamily::IsoReal, PairFamily::RealIso})
    for (const auto& r : enumerate_equal_dim_pairs(f, 16).pairs) {
      if (r.verdict.tag != VerdictTag::ForcedZero) continue;
      const auto& deciding = r.verdict.trace.back();
      CAPTURE(label(r.source));
      CAPTURE(label(r.target));
      CHECK(deciding.obstructs);
      CHECK(claim_holds(r.source, r.target, deciding));
      for (std::size_t i = 0; i + 1 < r.verdict.trace.size(); ++i) CHECK_FALSE(r.verdict.trace[i].obstructs);
    }
  for (const auto& r : enumerate_equal_dim_pairs(PairFamily::IsoIso, 12).pairs)
    CHECK(verdict(r.target, r.source).tag == VerdictTag::ForcedZero);
}

TEST_CASE("dimension parity") {
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k <= n; ++k) CHECK((dimension(isotropic(n, k)) % 2 == 1) == (k % 4 == 1 || k % 4 == 2));
}

TEST_CASE("theorem41_arith_check") {
  CHECK(theorem41_arith_check(15).ok());
  // From 16 on the scan reaches the equal-height pair (11,7),(16,3), whose k(n-k) and l(m-l) are 11 apart.
  const auto r = theorem41_arith_check(20);
  REQUIRE(r.violations.size() == 2);
  for (const auto& t : r.violations) {
    CHECK(std::min(t.k, t.l) == 3);
    CHECK(std::max(t.k, t.l) == 7);
    CHECK(std::llabs(t.kk_minus_ll) == 11);
    CHECK_FALSE(t.within_four);
    CHECK(t.divisible_by_four);
  }
  for (const auto& t : r.tuples) {
    CHECK(t.dim == oracle::iso_dim(t.n, t.k));
    CHECK(t.dim == oracle::iso_dim(t.m, t.l));
    CHECK(t.height == oracle::iso_height(t.n, t.k));
    CHECK(t.height == oracle::iso_height(t.m, t.l));
    CHECK(t.product == (t.k - t.l) * (t.k + t.l + 1));
    CHECK(t.divisible_by_four);
  }
  for (int l = 2; l < 40; ++l) {
    CHECK((l + 2 - l) * (2 * l + 3) % 4 != 0);
    CHECK(((2 * l + 2) % 4 == 0) == (l % 2 == 1));
  }
  CHECK(r.k_plus_two_rejected);
  CHECK(r.k_plus_one_parity);
  CHECK(std::any_of(r.violations.begin(), r.violations.end(), [](const ArithTuple& t) {
    return t.n == 11 && t.k == 7 && t.m == 16 && t.l == 3 && t.kk_minus_ll == -11;
  }));
}

TEST_CASE("case families") {
  const CaseFamily l3{3}, l5{5}, l7{7};
  CHECK(l3.lhs(1) == 1);
  CHECK(l3.rhs(1) == 0);
  CHECK(l7.lhs(1) == 4);
  CHECK(l7.rhs(1) == 6);
  for (int s = 1; s <= 100; ++s) CHECK(l5.lhs(s) > l5.rhs(s));
  for (const auto& f : {l3, l5, l7}) {
    const auto r = case_family_check(f, 1000);
    CHECK(r.ok());
    CHECK(r.failures.empty());
    CHECK(r.lhs_at_1 == f.lhs(1));
    for (int s = 1; s <= 50; ++s) {
      CHECK(oracle::iso_dim(f.n(s), f.k()) == oracle::iso_dim(f.m(s), f.l));
      const auto hk = oracle::iso_height(f.n(s), f.k()), hl = oracle::iso_height(f.m(s), f.l);
      CHECK(hk != hl);
    }
  }
}

TEST_CASE("theorem42_bound_check") {
  const auto r = theorem42_bound_check(50);
  CHECK(r.minimum == 5);
  CHECK(r.argmin_n == 3);
  CHECK(r.argmin_k == 2);
  CHECK(r.monotone_in_n);
  CHECK(r.ok());
}

TEST_CASE("structural Poincare series agree with brute force") {
  for (int n = 3; n <= 8; ++n)
    for (int k = 2; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto s = structural_poincare(isotropic(n, k));
      REQUIRE(s);
      CHECK(*s == build_full_isotropic(n, k).poincare());
      auto ext = structural_exterior_degrees(n, k);
      auto sieve = survivor_sieve(n, k).exterior;
      std::sort(ext.begin(), ext.end());
      std::sort(sieve.begin(), sieve.end());
      CHECK(ext == sieve);
    }
  for (int m = 3; m <= 11; m += 2)
    for (int l = 1; l < m; ++l) {
      const auto s = structural_poincare(real_oriented(m, l));
      REQUIRE(s);
      CHECK(*s == presentation_for(real_oriented(m, l)).poincare());
    }
  CHECK_FALSE(structural_poincare(real_oriented(8, 3)));
}

TEST_CASE("gaussian_binomial") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      const auto g = gaussian_binomial(a, b, 2);
      const auto box = oracle::box_counts(a, b);
      for (std::size_t i = 0; i < box.size(); ++i) CHECK(g.coefficient(2 * static_cast<int>(i)) == box[i]);
      CHECK(g.value_at_one() == oracle::binomial(a + b, a));
      CHECK(gaussian_binomial(a, b, 4).coefficient(4 * a * b) == 1);
    }
}
