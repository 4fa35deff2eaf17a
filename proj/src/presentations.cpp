#include "isograss/presentations.hpp"

#include "overloaded.hpp"

#include <numeric>

namespace isograss {

namespace {

std::string xi(int rank) { return "xi_" + std::to_string(rank); }
std::string gamma(int rank) { return "gamma_" + std::to_string(rank); }

std::optional<GradedPoly> lookup(const AlphabetPtr& alphabet, const std::string& name) {
  if (!alphabet->index_of(name)) return std::nullopt;
  return GradedPoly::generator(alphabet, name);
}

// Pontrjagin class p_j of an oriented rank-`rank` bundle whose generators carry
// `suffix`, or nullopt when it vanishes or is absent from the alphabet.
std::optional<GradedPoly> pontrjagin(int j, int rank, const std::string& suffix,
                                     const AlphabetPtr& alphabet) {
  if (j == 0) return GradedPoly::constant(alphabet, 1);
  const int half = rank / 2;
  if (rank % 2 == 0 && j == half) {
    auto e = lookup(alphabet, "e");
    if (!e) return std::nullopt;
    return pow(*e, 2);
  }
  if (j > half || (rank % 2 == 0 && j >= half)) return std::nullopt;
  return lookup(alphabet, "p" + std::to_string(j) + suffix);
}

// Generators of H*(BSO(rank)): p_1..p_{[rank/2]}, with the last replaced by
// the Euler class for even rank.
void append_bso_generators(int rank, const std::string& suffix, std::vector<Generator>& gens,
                           std::vector<std::string>& bundles) {
  const int half = rank / 2;
  const int plain = rank % 2 == 0 ? half - 1 : half;
  for (int j = 1; j <= plain; ++j) {
    gens.push_back({"p" + std::to_string(j) + suffix, 4 * j});
    bundles.push_back(xi(rank));
  }
  if (rank % 2 == 0 && rank > 0) {
    gens.push_back({"e", rank});
    bundles.push_back(xi(rank));
  }
}

void add_euler_alias(Presentation& p, int rank, const std::string& suffix) {
  if (rank % 2 != 0 || rank == 0) return;
  if (!p.alphabet()->index_of("e")) return;
  p.aliases.emplace("p" + std::to_string(rank / 2) + suffix,
                    pow(GradedPoly::generator(p.alphabet(), "e"), 2));
}

void require_isotropic_range(int n, int k) {
  if (k < 2 || k >= n)
    throw std::invalid_argument("isotropic presentation needs 2 <= k < n, got (n,k)=(" +
                                std::to_string(n) + "," + std::to_string(k) + ")");
}

Presentation sphere_presentation(int d, SpaceId space) {
  if (d < 1) throw std::invalid_argument("sphere dimension must be positive");
  if (d % 2 == 1) return Presentation(space, make_alphabet({}), {}, {d}, {});
  auto alphabet = make_alphabet({{"e", d}});
  auto e = GradedPoly::generator(alphabet, "e");
  return Presentation(space, alphabet, {pow(e, 2)}, {}, {"fundamental"});
}

}  // namespace

std::string_view to_string(SieveOutcome o) {
  switch (o) {
    case SieveOutcome::Relation:
      return "Relation";
    case SieveOutcome::Survivor:
      return "Survivor";
    case SieveOutcome::ConsumedEliminator:
      return "ConsumedEliminator";
  }
  return "?";
}

Presentation::Presentation(SpaceId space, AlphabetPtr alphabet, std::vector<GradedPoly> relations,
                           std::vector<int> exterior_degrees, std::vector<std::string> bundles)
    : space_(std::move(space)),
      ring_(HomogeneousIdeal(std::move(alphabet), std::move(relations))),
      exterior_(std::move(exterior_degrees)),
      bundles_(std::move(bundles)) {
  for (int d : exterior_)
    if (d < 1 || d % 2 == 0)
      throw std::invalid_argument("exterior degree " + std::to_string(d) + " is not positive odd");
  if (bundles_.size() != ring_.alphabet()->size())
    throw std::invalid_argument("bundle list does not match the generator alphabet");
}

Presentation Presentation::with_exterior(std::vector<int> exterior_degrees) const {
  Presentation p = *this;
  for (int d : exterior_degrees)
    if (d < 1 || d % 2 == 0)
      throw std::invalid_argument("exterior degree " + std::to_string(d) + " is not positive odd");
  p.exterior_ = std::move(exterior_degrees);
  return p;
}

int Presentation::quotient_top_degree() const {
  return isograss::quotient_top_degree(ring_, static_cast<int>(dimension(space_)));
}

std::int64_t Presentation::top_degree() const {
  return std::accumulate(exterior_.begin(), exterior_.end(),
                         static_cast<std::int64_t>(quotient_top_degree()));
}

PoincareSeries Presentation::poincare() const {
  PoincareSeries s = poincare_polynomial(ring_, quotient_top_degree());
  for (int d : exterior_) s = s * PoincareSeries::exterior(d);
  return s;
}

std::optional<GradedPoly> Presentation::named_element(std::string_view name) const {
  if (alphabet()->index_of(name)) return GradedPoly::generator(alphabet(), name);
  if (auto it = aliases.find(std::string(name)); it != aliases.end()) return it->second;
  return std::nullopt;
}

AlphabetPtr sieve_alphabet(int n, int k) {
  std::vector<Generator> gens;
  std::vector<std::string> bundles;
  append_bso_generators(k, "", gens, bundles);
  for (int t = 1; t <= n - k; ++t) gens.push_back({"c" + std::to_string(t), 2 * t});
  return make_alphabet(std::move(gens));
}

GradedPoly chern_image(int i, int n, int k, const AlphabetPtr& alphabet) {
  if (i < 1 || k < 1 || k > n) throw std::invalid_argument("chern_image: bad parameters");
  GradedPoly out(alphabet);
  for (int j = 0; j <= i / 2; ++j) {
    auto p = pontrjagin(j, k, "", alphabet);
    if (!p) continue;
    const int t = i - 2 * j;
    std::optional<GradedPoly> c;
    if (t == 0)
      c = GradedPoly::constant(alphabet, 1);
    else if (t <= n - k)
      c = lookup(alphabet, "c" + std::to_string(t));
    if (!c) continue;
    out += *p * *c;
  }
  return out;
}

GradedPoly differential(int i, int n, int k) {
  if (i < 1 || i > n || k < 1 || k > n)
    throw std::invalid_argument("differential needs 1 <= i <= n and 1 <= k <= n");
  return chern_image(i, n, k, sieve_alphabet(n, k));
}

SieveResult survivor_sieve(int n, int k) {
  if (k < 1 || k >= n) throw std::invalid_argument("survivor sieve needs 1 <= k < n");
  SieveResult result{sieve_alphabet(n, k), {}, {}, {}};
  for (int i = 1; i <= n; ++i) {
    GradedPoly d = chern_image(i, n, k, result.alphabet);
    QuotientRing q(HomogeneousIdeal(result.alphabet, result.relations));
    GradedPoly red = q.normal_form(d);
    SieveOutcome outcome;
    if (red.is_zero()) {
      outcome = SieveOutcome::Survivor;
      result.exterior.push_back(2 * i - 1);
    } else {
      outcome = (i % 2 == 1 && i <= n - k) ? SieveOutcome::ConsumedEliminator
                                           : SieveOutcome::Relation;
      result.relations.push_back(d);
    }
    result.trace.steps.push_back({i, std::move(d), std::move(red), outcome});
  }
  return result;
}

Presentation build_quotient_A(int n, int k) {
  require_isotropic_range(n, k);
  std::vector<Generator> gens;
  std::vector<std::string> bundles;
  append_bso_generators(k, "", gens, bundles);
  for (int t = 2; t <= n - k; t += 2) {
    gens.push_back({"c" + std::to_string(t), 2 * t});
    bundles.push_back(gamma(n - k));
  }
  auto alphabet = make_alphabet(std::move(gens));

  std::vector<GradedPoly> relations;
  for (int j = 1; 2 * j <= n; ++j) {
    GradedPoly d = chern_image(2 * j, n, k, alphabet);
    QuotientRing q(HomogeneousIdeal(alphabet, relations));
    if (!q.normal_form(d).is_zero()) relations.push_back(std::move(d));
  }
  Presentation p(IsotropicOriented{n, k}, alphabet, std::move(relations), {}, std::move(bundles));
  add_euler_alias(p, k, "");
  return p;
}

Presentation build_full_isotropic(int n, int k) {
  require_isotropic_range(n, k);
  SieveResult sieve = survivor_sieve(n, k);
  Presentation p = build_quotient_A(n, k).with_exterior(sieve.exterior);
  p.trace = std::move(sieve.trace);
  const auto expected = dimension(p.space());
  if (p.top_degree() != expected)
    throw TopDegreeMismatch("top degree " + std::to_string(p.top_degree()) + " of " +
                            label(p.space()) + " differs from its dimension " +
                            std::to_string(expected));
  return p;
}

Presentation build_real_oriented_odd(int m, int l) {
  if (m % 2 == 0)
    throw UnsupportedSpace("ring presentations of oriented real Grassmannians are only "
                           "available for odd ambient dimension, got m=" + std::to_string(m));
  if (l < 2 || l > m - 2)
    throw std::invalid_argument("real Grassmannian presentation needs 2 <= l <= m-2");
  const int r1 = l, r2 = m - l;
  std::vector<Generator> gens;
  std::vector<std::string> bundles;
  append_bso_generators(r1, "", gens, bundles);
  append_bso_generators(r2, "'", gens, bundles);
  auto alphabet = make_alphabet(std::move(gens));

  std::vector<GradedPoly> relations;
  for (int t = 1; t <= (m - 1) / 2; ++t) {
    GradedPoly component(alphabet);
    for (int j = 0; j <= t; ++j) {
      auto a = pontrjagin(j, r1, "", alphabet);
      auto b = pontrjagin(t - j, r2, "'", alphabet);
      if (a && b) component += *a * *b;
    }
    relations.push_back(std::move(component));
  }
  Presentation p(RealOriented{m, l}, alphabet, std::move(relations), {}, std::move(bundles));
  add_euler_alias(p, r1, "");
  add_euler_alias(p, r2, "'");
  return p;
}

Presentation build_sphere(int d) { return sphere_presentation(d, Sphere{d}); }

Presentation presentation_for(const SpaceId& space) {
  validate(space);
  return std::visit(
      overloaded{
          [&](const IsotropicOriented& s) -> Presentation {
            if (s.k == 1) return sphere_presentation(2 * s.n - 1, space);
            if (s.k == s.n)
              throw UnsupportedSpace(label(space) +
                                     " (k = n) has only H^1/H^4 facts, no ring presentation");
            return build_full_isotropic(s.n, s.k);
          },
          [&](const RealOriented& s) -> Presentation {
            if (s.l == 1 || s.l == s.m - 1) return sphere_presentation(s.m - 1, space);
            return build_real_oriented_odd(s.m, s.l);
          },
          [&](const ComplexGrass&) -> Presentation {
            throw UnsupportedSpace(label(space) +
                                   ": complex Grassmannians are described by the Schubert "
                                   "calculus summary, not a ring presentation");
          },
          [&](const Sphere& s) -> Presentation { return sphere_presentation(s.d, space); },
      },
      space);
}

FactSheet fact_sheet(const SpaceId& space) {
  validate(space);
  FactSheet f{space};
  auto as_sphere = [&](int d, std::string note) {
    f.sphere_equivalent = Sphere{d};
    f.h1_rank = d == 1 ? 1 : 0;
    f.h4_rank = d == 4 ? 1 : 0;
    if (d == 4) f.h4_generator_name = "e";
    f.note = std::move(note);
  };
  std::visit(
      overloaded{
          [&](const IsotropicOriented& s) {
            f.unoriented_companion_orientable = s.k % 2 == 1;
            if (s.k == 1) {
              as_sphere(2 * s.n - 1, "U(n)/U(n-1), a sphere");
            } else if (s.k == s.n) {
              f.h1_rank = 1;
              f.h4_rank = 0;
              f.note = s.n == 2 ? "U(2)/SO(2), the 3-dimensional oriented case"
                                : "U(n)/SO(n): H^1 of rank 1, H^4 zero";
            } else {
              // p1 dies when n - k = 1 (c2 of a line bundle vanishes); for
              // k = 4 the Euler class is a second degree-4 generator.
              const bool p1_alive = s.n - s.k >= 2;
              f.h1_rank = 0;
              f.h4_rank = (p1_alive ? 1 : 0) + (s.k == 4 ? 1 : 0);
              if (p1_alive) f.h4_generator_name = "p1";
              else if (s.k == 4) f.h4_generator_name = "e";
              if (s.k == 2)
                f.note = "H^2 spanned by e, H^4 by p1 = e^2";
              else if (f.h4_rank == 0)
                f.note = "zero in degrees 1..4: p1 vanishes when n - k = 1";
              else
                f.note = "zero in degrees 1..3";
            }
          },
          [&](const RealOriented& s) {
            if (s.l == 1 || s.l == s.m - 1) {
              as_sphere(s.m - 1, "oriented lines or hyperplanes, a sphere");
            } else {
              f.h1_rank = 0;
              f.h4_rank = 1;
              f.h4_generator_name = "p1";
              f.note = s.m % 2 == 1 ? "H^4 spanned by p1"
                                    : "even ambient dimension: H^4 taken as spanned by p1";
            }
          },
          [&](const ComplexGrass& s) {
            const int w = s.n - s.k;
            if (s.k == 0 || w == 0) {
              f.note = "a point";
            } else if (s.k == 1 && w == 1) {
              as_sphere(2, "CP^1");
            } else {
              f.h4_rank = (w >= 2 ? 1 : 0) + (s.k >= 2 ? 1 : 0);
              f.note = "Schubert classes; H^4 spanned by sigma_2 and sigma_{1,1} in the box";
            }
          },
          [&](const Sphere& s) { as_sphere(s.d, "sphere"); },
      },
      space);
  return f;
}

std::vector<int> remark_exterior_formula(int n, int k) {
  require_isotropic_range(n, k);
  const int start = 4 * ((n - k + 1) / 2) + 1;
  const int end = (n % 2 == 0 && k % 2 == 0) ? 2 * n - 3 : 2 * n - 1;
  std::vector<int> out;
  for (int d = start; d <= end; d += 2) out.push_back(d);
  return out;
}

}  // namespace isograss
