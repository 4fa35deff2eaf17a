#include "isograss/obstruction.hpp"

#include "isograss/presentations.hpp"
#include "overloaded.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <tuple>

namespace isograss {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t iso_dim(std::int64_t n, std::int64_t k) {
  return checked_add(checked_mul(2 * k, n - k), checked_mul(k, k + 1) / 2);
}

std::int64_t iso_height(std::int64_t n, std::int64_t k) { return (k / 2) * ((n - k) / 2); }

SpaceId normalize(const SpaceId& space) {
  const FactSheet f = fact_sheet(space);
  if (f.sphere_equivalent) return *f.sphere_equivalent;
  return space;
}

std::optional<std::int64_t> height_if_defined(const SpaceId& space) {
  return std::visit(
      overloaded{
          [](const IsotropicOriented& s) -> std::optional<std::int64_t> {
            if (s.k >= 2 && s.k < s.n) return iso_height(s.n, s.k);
            return std::nullopt;
          },
          [](const RealOriented& s) -> std::optional<std::int64_t> {
            if (s.l >= 2 && s.l <= s.m - 2) return std::int64_t{s.l / 2} * ((s.m - s.l) / 2);
            return std::nullopt;
          },
          [](const auto&) -> std::optional<std::int64_t> { return std::nullopt; },
      },
      space);
}

// Isotropic with 2 <= k < n: (n, k).
std::optional<std::pair<int, int>> proper_isotropic(const SpaceId& space) {
  if (const auto* s = std::get_if<IsotropicOriented>(&space))
    if (s->k >= 2 && s->k < s->n) return std::pair{s->n, s->k};
  return std::nullopt;
}

std::string join_reason(std::string_view name, std::initializer_list<std::int64_t> vals) {
  std::string out(name);
  out += '(';
  bool first = true;
  for (auto v : vals) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += ')';
  return out;
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::int64_t s, std::int64_t t)
    : std::invalid_argument("dimension mismatch: source has dimension " + std::to_string(s) +
                            ", target has dimension " + std::to_string(t)),
      source_dim(s),
      target_dim(t) {}

std::int64_t p1_height_formula(const SpaceId& space) {
  validate(space);
  if (auto h = height_if_defined(space)) return *h;
  throw std::invalid_argument("p1 height formula needs an isotropic space with 2 <= k < n or a "
                              "real Grassmannian with 2 <= l <= m-2, got " +
                              label(space));
}

PoincareSeries gaussian_binomial(int a, int b, int step) {
  if (a < 0 || b < 0 || step < 1) throw std::invalid_argument("gaussian_binomial: bad arguments");
  // Partitions in an a x b box counted by size, G(i,j) = G(i-1,j) + q^i G(i,j-1).
  const std::size_t top = static_cast<std::size_t>(a) * static_cast<std::size_t>(b);
  std::vector<std::vector<std::int64_t>> prev(static_cast<std::size_t>(b) + 1,
                                              std::vector<std::int64_t>(top + 1, 0));
  for (auto& v : prev) v[0] = 1;
  for (int i = 1; i <= a; ++i) {
    std::vector<std::vector<std::int64_t>> cur(static_cast<std::size_t>(b) + 1,
                                               std::vector<std::int64_t>(top + 1, 0));
    cur[0][0] = 1;
    for (int j = 1; j <= b; ++j) {
      auto& row = cur[static_cast<std::size_t>(j)];
      row = prev[static_cast<std::size_t>(j)];
      const auto& left = cur[static_cast<std::size_t>(j - 1)];
      for (std::size_t d = 0; d + static_cast<std::size_t>(i) <= top; ++d)
        row[d + static_cast<std::size_t>(i)] =
            checked_add(row[d + static_cast<std::size_t>(i)], left[d]);
    }
    prev = std::move(cur);
  }
  const auto& q = prev[static_cast<std::size_t>(b)];
  std::vector<std::int64_t> x(top * static_cast<std::size_t>(step) + 1, 0);
  for (std::size_t d = 0; d <= top; ++d) x[d * static_cast<std::size_t>(step)] = q[d];
  return PoincareSeries(std::move(x));
}

std::vector<int> structural_exterior_degrees(int n, int k) {
  if (k < 2 || k >= n) throw std::invalid_argument("structural exterior degrees need 2 <= k < n");
  const int m = k / 2, b = (n - k) / 2;
  std::vector<int> out;
  for (int i = n - k + 1; i <= n; ++i)
    if (i % 2 == 1) out.push_back(2 * i - 1);
  for (int j = m + b + 1; j <= n / 2; ++j) out.push_back(4 * j - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PoincareSeries> structural_poincare(const SpaceId& space) {
  validate(space);
  const SpaceId s = normalize(space);
  return std::visit(
      overloaded{
          [](const IsotropicOriented& v) -> std::optional<PoincareSeries> {
            if (v.k < 2 || v.k >= v.n) return std::nullopt;
            const int m = v.k / 2, b = (v.n - v.k) / 2;
            PoincareSeries p = gaussian_binomial(m, b, 4);
            if (v.k % 2 == 0) p = p * PoincareSeries::exterior(v.k);
            for (int d : structural_exterior_degrees(v.n, v.k)) p = p * PoincareSeries::exterior(d);
            return p;
          },
          [](const RealOriented& v) -> std::optional<PoincareSeries> {
            if (v.m % 2 == 0) return std::nullopt;
            const int s2 = (v.m - 1) / 2;
            const int even = v.l % 2 == 0 ? v.l : v.m - v.l;
            const int a = even / 2;
            return gaussian_binomial(a, s2 - a, 4) * PoincareSeries::exterior(even);
          },
          [](const ComplexGrass& v) -> std::optional<PoincareSeries> {
            return gaussian_binomial(v.k, v.n - v.k, 2);
          },
          [](const Sphere& v) -> std::optional<PoincareSeries> {
            return PoincareSeries::exterior(v.d);
          },
      },
      s);
}

std::string_view to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::AnyDegreePossible: return "AnyDegreePossible";
    case VerdictTag::NoObstructionDetected: return "NoObstructionDetected";
    case VerdictTag::ForcedZero: return "ForcedZero";
  }
  return "?";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::SphereTarget: return "SphereTarget";
    case Criterion::Identical: return "Identical";
    case Criterion::H1: return "H1";
    case Criterion::H4: return "H4";
    case Criterion::P1Height: return "P1Height";
    case Criterion::CaseAnalysis: return "CaseAnalysis";
    case Criterion::DimensionBound: return "DimensionBound";
    case Criterion::Betti: return "Betti";
  }
  return "?";
}

std::int64_t CriterionCheck::value(std::string_view name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  throw std::out_of_range("criterion check has no value '" + std::string(name) + "'");
}

std::string Verdict::reason() const {
  for (const auto& c : trace) {
    switch (c.criterion) {
      case Criterion::SphereTarget:
        if (tag == VerdictTag::AnyDegreePossible) return join_reason("SphereTarget", {c.value("sphere_dim")});
        break;
      case Criterion::Identical:
        if (c.value("identical") == 1) return "Identical";
        break;
      case Criterion::H1:
        if (c.obstructs) return join_reason("H1Mismatch", {c.value("source_h1"), c.value("target_h1")});
        break;
      case Criterion::H4:
        if (c.obstructs) return join_reason("H4Mismatch", {c.value("source_h4"), c.value("target_h4")});
        break;
      case Criterion::P1Height:
        if (c.obstructs)
          return join_reason("HeightMismatch", {c.value("source_height"), c.value("target_height")});
        break;
      case Criterion::Betti:
        if (c.obstructs)
          return join_reason("BettiExceeds",
                             {c.value("degree"), c.value("source_betti"), c.value("target_betti")});
        break;
      case Criterion::CaseAnalysis:
      case Criterion::DimensionBound:
        break;
    }
  }
  return {};
}

Verdict verdict(const SpaceId& source, const SpaceId& target) {
  validate(source);
  validate(target);
  const std::int64_t ds = dimension(source), dt = dimension(target);
  if (ds != dt) throw DimensionMismatch(ds, dt);

  Verdict v;
  auto decide = [&](VerdictTag tag) {
    v.tag = tag;
    return v;
  };

  const FactSheet fs = fact_sheet(source), ft = fact_sheet(target);

  {
    CriterionCheck c{Criterion::SphereTarget, {{"source_dim", ds}, {"target_dim", dt}}};
    c.values.emplace_back("target_is_sphere", ft.sphere_equivalent ? 1 : 0);
    if (ft.sphere_equivalent) c.values.emplace_back("sphere_dim", ft.sphere_equivalent->d);
    v.trace.push_back(c);
    if (ft.sphere_equivalent) return decide(VerdictTag::AnyDegreePossible);
  }

  const SpaceId ns = normalize(source), nt = normalize(target);
  {
    const bool same = ns == nt;
    v.trace.push_back({Criterion::Identical, {{"identical", same ? 1 : 0}}});
    if (same) return decide(VerdictTag::NoObstructionDetected);
  }

  {
    CriterionCheck c{Criterion::H1, {{"source_h1", fs.h1_rank}, {"target_h1", ft.h1_rank}}};
    c.obstructs = ft.h1_rank > fs.h1_rank;
    v.trace.push_back(c);
    if (c.obstructs) return decide(VerdictTag::ForcedZero);
  }

  {
    CriterionCheck c{Criterion::H4, {{"source_h4", fs.h4_rank}, {"target_h4", ft.h4_rank}}};
    c.obstructs = ft.h4_rank > 0 && fs.h4_rank == 0;
    v.trace.push_back(c);
    if (c.obstructs) return decide(VerdictTag::ForcedZero);
  }

  const auto hs = height_if_defined(ns), ht = height_if_defined(nt);
  if (hs && ht) {
    CriterionCheck c{Criterion::P1Height, {{"source_height", *hs}, {"target_height", *ht}}};
    c.obstructs = *hs != *ht;
    v.trace.push_back(c);
    if (c.obstructs) return decide(VerdictTag::ForcedZero);

    const auto is = proper_isotropic(ns), it = proper_isotropic(nt);
    if (is && it) {
      const std::int64_t n = is->first, k = is->second, m = it->first, l = it->second;
      const std::int64_t diff = k * (n - k) - l * (m - l);
      const std::int64_t prod = (k - l) * (k + l + 1);
      CriterionCheck a{Criterion::CaseAnalysis,
                       {{"kk_minus_ll", diff},
                        {"product", prod},
                        {"product_mod_4", ((prod % 4) + 4) % 4},
                        {"within_four", std::llabs(diff) <= 4 ? 1 : 0},
                        {"within_sixteen", std::llabs(prod) <= 16 ? 1 : 0}}};
      a.note = "equal heights with distinct parameters; the inequalities are recorded, not used";
      v.trace.push_back(a);
    } else if (is || it) {
      const auto [n, k] = is ? *is : *it;
      const std::int64_t value = std::int64_t{k} * (n - k) + std::int64_t{k} * (k + 1) / 2;
      CriterionCheck b{Criterion::DimensionBound, {{"bound_value", value}}};
      b.values.emplace_back("threshold", 4);
      b.note = "informational";
      v.trace.push_back(b);
    }
  } else {
    CriterionCheck c{Criterion::P1Height, {{"source_height", hs.value_or(-1)}, {"target_height", ht.value_or(-1)}}};
    c.note = "height unavailable on at least one side; skipped";
    v.trace.push_back(c);
  }

  const auto ps = structural_poincare(ns), pt = structural_poincare(nt);
  if (ps && pt) {
    const int top = std::max(ps->top_degree(), pt->top_degree());
    int bad = -1;
    for (int d = 0; d <= top; ++d)
      if (pt->coefficient(d) > ps->coefficient(d)) {
        bad = d;
        break;
      }
    CriterionCheck c{Criterion::Betti, {}};
    if (bad >= 0) {
      c.values = {{"degree", bad},
                  {"source_betti", ps->coefficient(bad)},
                  {"target_betti", pt->coefficient(bad)}};
      c.obstructs = true;
    } else {
      c.values = {{"degree", -1}, {"source_total", ps->value_at_one()}, {"target_total", pt->value_at_one()}};
      c.note = "target Betti numbers bounded by the source's in every degree";
    }
    v.trace.push_back(c);
    if (c.obstructs) return decide(VerdictTag::ForcedZero);
  }

  return decide(VerdictTag::NoObstructionDetected);
}

std::string_view to_string(PairFamily f) {
  switch (f) {
    case PairFamily::IsoIso: return "IsoIso";
    case PairFamily::IsoReal: return "IsoReal";
    case PairFamily::RealIso: return "RealIso";
  }
  return "?";
}

std::optional<PairFamily> parse_family(std::string_view name) {
  for (auto f : {PairFamily::IsoIso, PairFamily::IsoReal, PairFamily::RealIso})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

Enumeration enumerate_equal_dim_pairs(PairFamily family, int bound) {
  if (bound < 3) throw std::invalid_argument("enumeration bound must be >= 3");
  std::vector<SpaceId> iso, real;
  for (int n = 2; n <= bound; ++n)
    for (int k = 2; k <= n; ++k) iso.push_back(IsotropicOriented{n, k});
  for (int m = 4; m <= bound; ++m)
    for (int l = 2; l <= m - 2; ++l) real.push_back(RealOriented{m, l});

  const auto& sources = family == PairFamily::RealIso ? real : iso;
  const auto& targets = family == PairFamily::IsoReal ? real : iso;
  std::multimap<std::int64_t, const SpaceId*> by_dim;
  for (const auto& t : targets) by_dim.emplace(dimension(t), &t);

  Enumeration e{family, bound, {}, {}};
  for (const auto& s : sources) {
    const std::int64_t d = dimension(s);
    auto [lo, hi] = by_dim.equal_range(d);
    for (auto it = lo; it != hi; ++it) {
      if (*it->second == s) continue;
      e.pairs.push_back({s, *it->second, d, verdict(s, *it->second)});
    }
  }
  std::sort(e.pairs.begin(), e.pairs.end(), [](const PairRecord& a, const PairRecord& b) {
    return std::tie(a.dim, a.source, a.target) < std::tie(b.dim, b.source, b.target);
  });
  for (const auto& p : e.pairs) {
    switch (p.verdict.tag) {
      case VerdictTag::AnyDegreePossible: ++e.counts.any_degree; break;
      case VerdictTag::NoObstructionDetected: ++e.counts.no_obstruction; break;
      case VerdictTag::ForcedZero: ++e.counts.forced_zero; break;
    }
    const auto hs = height_if_defined(p.source), ht = height_if_defined(p.target);
    if (hs && ht && *hs == *ht) ++e.counts.equal_height_distinct;
  }
  return e;
}

Theorem41Report theorem41_arith_check(int bound) {
  if (bound < 3) throw std::invalid_argument("scan bound must be >= 3");
  Theorem41Report r;
  r.bound = bound;
  for (int n = 3; n <= bound; ++n)
    for (int k = 2; k < n; ++k)
      for (int m = 3; m <= bound; ++m)
        for (int l = 2; l < m; ++l) {
          const std::int64_t dim = iso_dim(n, k);
          if (dim != iso_dim(m, l) || iso_height(n, k) != iso_height(m, l)) continue;
          ArithTuple t{n, k, m, l, dim, iso_height(n, k)};
          t.kk_minus_ll = std::int64_t{k} * (n - k) - std::int64_t{l} * (m - l);
          t.product = std::int64_t{k - l} * (k + l + 1);
          t.within_four = std::llabs(t.kk_minus_ll) <= 4;
          t.divisible_by_four = t.product % 4 == 0;
          t.within_sixteen = std::llabs(t.product) <= 16;
          t.same_space = n == m && k == l;
          r.tuples.push_back(t);
          if (!(t.within_four && t.divisible_by_four && t.within_sixteen && t.same_space))
            r.violations.push_back(t);
        }
  for (int l = 2; l < bound; ++l) {
    const std::int64_t two = 2LL * (2 * l + 3);
    if (two % 4 == 0) r.k_plus_two_rejected = false;
    const std::int64_t one = 2LL * l + 2;
    if ((one % 4 == 0) != (l % 2 == 1)) r.k_plus_one_parity = false;
  }
  return r;
}

int CaseFamily::m(int s) const {
  switch (l) {
    case 3: return 4 * s + 1;
    case 5: return 6 * s + 2;
    case 7: return 8 * s + 3;
  }
  throw std::invalid_argument("case family needs l in {3,5,7}");
}

int CaseFamily::n(int s) const {
  switch (l) {
    case 3: return 3 * s + 2;
    case 5: return 5 * s + 3;
    case 7: return 7 * s + 4;
  }
  throw std::invalid_argument("case family needs l in {3,5,7}");
}

std::int64_t CaseFamily::lhs(int s) const {
  switch (l) {
    case 3: return 2LL * s - 1;
    case 5: return 3 * floor_div(5LL * s - 3, 2);
    case 7: return 4 * floor_div(7LL * s - 4, 2);
  }
  throw std::invalid_argument("case family needs l in {3,5,7}");
}

std::int64_t CaseFamily::rhs(int s) const {
  switch (l) {
    case 3: return 2 * floor_div(3LL * s - 2, 2);
    case 5: return 2 * (3LL * s - 2);
    case 7: return 3 * (4LL * s - 2);
  }
  throw std::invalid_argument("case family needs l in {3,5,7}");
}

CaseFamilyReport case_family_check(const CaseFamily& family, int s_max) {
  if (family.l != 3 && family.l != 5 && family.l != 7)
    throw std::invalid_argument("case family needs l in {3,5,7}");
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  CaseFamilyReport r;
  r.l = family.l;
  r.s_max = s_max;
  r.lhs_at_1 = family.lhs(1);
  r.rhs_at_1 = family.rhs(1);
  for (int s = 1; s <= s_max; ++s) {
    const int m = family.m(s), n = family.n(s), k = family.k();
    bool fail = false;
    if (iso_dim(m, family.l) != iso_dim(n, k)) {
      r.dimension_identity_holds = false;
      fail = true;
    }
    // The two expressions are the heights of the two sides in some order.
    const std::int64_t h1 = iso_height(m, family.l), h2 = iso_height(n, k);
    const std::int64_t a = family.lhs(s), b = family.rhs(s);
    const bool expressions_match = (a == h1 && b == h2) || (a == h2 && b == h1);
    if (a == b || !expressions_match) {
      r.heights_always_differ = false;
      fail = true;
    }
    if (fail) r.failures.push_back(s);
  }
  return r;
}

Theorem42Report theorem42_bound_check(int bound) {
  if (bound < 3) throw std::invalid_argument("scan bound must be >= 3");
  Theorem42Report r;
  r.bound = bound;
  bool first = true;
  for (int k = 2; k < bound; ++k) {
    std::int64_t prev = 0;
    for (int n = k + 1; n <= bound; ++n) {
      const std::int64_t v = std::int64_t{k} * (n - k) + std::int64_t{k} * (k + 1) / 2;
      if (n > k + 1 && v <= prev) r.monotone_in_n = false;
      prev = v;
      if (first || v < r.minimum) {
        r.minimum = v;
        r.argmin_n = n;
        r.argmin_k = k;
        first = false;
      }
    }
  }
  return r;
}

}  // namespace isograss
