#include "isograss/serialize.hpp"

#include "isograss/exprparse.hpp"
#include "isograss/schubert.hpp"
#include "overloaded.hpp"

#include <algorithm>

namespace isograss {

namespace {

Json series_json(const PoincareSeries& s) {
  Json coeffs = Json::array();
  for (auto c : s.coefficients()) coeffs.push_back(c);
  return coeffs;
}

Json params_json(const SpaceId& space) {
  return std::visit(overloaded{
                        [](const IsotropicOriented& s) { return Json{{"n", s.n}, {"k", s.k}}; },
                        [](const RealOriented& s) { return Json{{"m", s.m}, {"l", s.l}}; },
                        [](const ComplexGrass& s) { return Json{{"n", s.n}, {"k", s.k}}; },
                        [](const Sphere& s) { return Json{{"d", s.d}}; },
                    },
                    space);
}

Json space_ref(const SpaceId& space) {
  return Json{{"label", label(space)}, {"kind", kind_name(space)}, {"params", params_json(space)},
              {"dimension", dimension(space)}};
}

Json check_json(const CriterionCheck& c) {
  Json values = Json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  Json j{{"criterion", to_string(c.criterion)}, {"values", values}, {"obstructs", c.obstructs}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json counts_json(const VerdictCounts& c) {
  return Json{{"AnyDegreePossible", c.any_degree},
              {"NoObstructionDetected", c.no_obstruction},
              {"ForcedZero", c.forced_zero},
              {"equal_height_distinct", c.equal_height_distinct}};
}

Json tuple_json(const ArithTuple& t) {
  return Json{{"n", t.n},
              {"k", t.k},
              {"m", t.m},
              {"l", t.l},
              {"dim", t.dim},
              {"height", t.height},
              {"kk_minus_ll", t.kk_minus_ll},
              {"product", t.product},
              {"within_four", t.within_four},
              {"divisible_by_four", t.divisible_by_four},
              {"within_sixteen", t.within_sixteen},
              {"same_space", t.same_space}};
}

std::string tuple_label(const ArithTuple& t) {
  return "(n,k)=(" + std::to_string(t.n) + "," + std::to_string(t.k) + ") (m,l)=(" +
         std::to_string(t.m) + "," + std::to_string(t.l) + ")";
}

// Presentation of a space supporting element expressions.
Presentation element_presentation(const SpaceId& space) { return presentation_for(space); }

// Coefficients of `a` compared with `b` after the substitution x -> x^2.
bool matches_doubled(const PoincareSeries& a, const PoincareSeries& b) {
  const int top = std::max(a.top_degree(), 2 * b.top_degree());
  for (int d = 0; d <= top; ++d) {
    const std::int64_t want = d % 2 == 0 ? b.coefficient(d / 2) : 0;
    if (a.coefficient(d) != want) return false;
  }
  return true;
}

}  // namespace

Json space_json(const SpaceId& space) {
  const FactSheet f = fact_sheet(space);
  Json j = space_ref(space);
  j["normalized"] = f.sphere_equivalent ? Json(label(*f.sphere_equivalent)) : Json(nullptr);
  Json facts{{"h1_rank", f.h1_rank},
             {"h4_rank", f.h4_rank},
             {"h4_generator", f.h4_generator_name ? Json(*f.h4_generator_name) : Json(nullptr)},
             {"orientable", f.orientable}};
  if (f.unoriented_companion_orientable)
    facts["unoriented_orientable"] = *f.unoriented_companion_orientable;
  facts["note"] = f.note;
  j["facts"] = facts;
  try {
    j["p1_height_formula"] = p1_height_formula(space);
  } catch (const std::invalid_argument&) {
    j["p1_height_formula"] = nullptr;
  }
  return j;
}

Json presentation_json(const Presentation& p, bool with_trace) {
  Json gens = Json::array();
  const auto& alpha = *p.alphabet();
  for (std::size_t i = 0; i < alpha.size(); ++i)
    gens.push_back({{"name", alpha[i].name}, {"degree", alpha[i].degree}, {"bundle", p.bundles()[i]}});
  Json aliases = Json::object();
  for (const auto& [name, value] : p.aliases) aliases[name] = render(value);
  Json rels = Json::array();
  for (const auto& r : p.relations()) rels.push_back(render(r));

  Json j{{"format", kPresentationFormat},
         {"space", space_ref(p.space())},
         {"generators", gens},
         {"aliases", aliases},
         {"relations", rels},
         {"exterior_degrees", p.exterior_degrees()},
         {"quotient_top_degree", p.quotient_top_degree()},
         {"top_degree", p.top_degree()}};

  if (p.trace) {
    Json sieve_gens = Json::array(), sieve_rels = Json::array();
    if (!p.trace->steps.empty())
      for (const auto& g : p.trace->steps.front().differential.alphabet()->entries())
        sieve_gens.push_back({{"name", g.name}, {"degree", g.degree}});
    for (const auto& s : p.trace->steps)
      if (s.outcome != SieveOutcome::Survivor) sieve_rels.push_back(render(s.differential));
    j["sieve"] = {{"generators", sieve_gens}, {"relations", sieve_rels}};
  }

  if (with_trace && p.trace) {
    Json steps = Json::array();
    for (const auto& s : p.trace->steps)
      steps.push_back({{"index", s.index},
                       {"fiber_degree", 2 * s.index - 1},
                       {"differential", render(s.differential)},
                       {"reduction", render(s.reduction)},
                       {"outcome", to_string(s.outcome)}});
    const auto& iso = std::get<IsotropicOriented>(p.space());
    const auto formula = remark_exterior_formula(iso.n, iso.k);
    std::int64_t formula_top = p.quotient_top_degree();
    for (int d : formula) formula_top += d;
    const bool identity = formula_top == dimension(p.space());
    const bool agrees = formula == p.exterior_degrees();
    j["trace"] = {{"steps", steps},
                  {"remark_formula",
                   {{"degrees", formula},
                    {"top_degree", formula_top},
                    {"satisfies_top_degree_identity", identity},
                    {"agrees_with_sieve", agrees},
                    {"discrepancy", !agrees}}}};
  }
  return j;
}

Json complex_summary_json(const ComplexGrass& g) {
  validate(g);
  const schubert::Box box{g.k, g.n - g.k};
  const auto be = schubert::betti_and_euler(box);
  std::map<int, Json> by_degree;
  for (const auto& lam : schubert::partitions_in_box(box.rows, box.width)) {
    auto& slot = by_degree[2 * lam.size()];
    if (slot.is_null()) slot = Json::array();
    slot.push_back(lam.parts());
  }
  Json parts = Json::array();
  for (auto& [deg, list] : by_degree) parts.push_back({{"degree", deg}, {"partitions", list}});
  return Json{{"space", space_ref(g)},
              {"box", {{"rows", box.rows}, {"width", box.width}}},
              {"schubert_classes", parts},
              {"poincare", render(be.series)},
              {"coefficients", series_json(be.series)},
              {"euler", be.euler},
              {"sigma1_height", schubert::sigma1_height(box)}};
}

Json poincare_json(const SpaceId& space) {
  validate(space);
  PoincareSeries s;
  std::optional<std::int64_t> euler;
  if (const auto* g = std::get_if<ComplexGrass>(&space)) {
    const auto be = schubert::betti_and_euler({g->k, g->n - g->k});
    s = be.series;
    euler = be.euler;
  } else {
    s = presentation_for(space).poincare();
  }
  const std::int64_t dim = dimension(space);
  Json j{{"space", space_ref(space)},
         {"poincare", render(s)},
         {"coefficients", series_json(s)},
         {"top_degree", s.top_degree()},
         {"dimension", dim},
         {"top_equals_dimension", s.top_degree() == dim},
         {"palindromic", s.is_palindromic(s.top_degree())}};
  if (euler) j["euler"] = *euler;
  if (auto st = structural_poincare(space)) j["structural_agrees"] = *st == s;
  return j;
}

Json height_json(const SpaceId& space, const std::string& expression, std::size_t cap) {
  const Presentation p = element_presentation(space);
  const GradedPoly x = evaluate(parse(expression), p.alphabet(), p.aliases);
  const auto deg = x.homogeneous_degree();
  if (!x.is_zero() && (!deg || *deg <= 0))
    throw std::invalid_argument("height needs a homogeneous element of positive degree");
  const std::size_t used = cap != 0 ? cap
                           : x.is_zero() ? 1
                                         : default_height_cap(p.quotient_top_degree(), *deg);
  const auto h = height(p.quotient(), x, used);
  Json j{{"space", space_ref(space)},
         {"element", expression},
         {"value", render(x)},
         {"normal_form", render(p.quotient().normal_form(x))},
         {"cap", used},
         {"height", h ? Json(*h) : Json(nullptr)},
         {"overflow", !h.has_value()}};
  std::string trimmed;
  for (char c : expression)
    if (c != ' ' && c != '\t') trimmed += c;
  if (trimmed == "p1") {
    try {
      const std::int64_t f = p1_height_formula(space);
      j["formula"] = f;
      j["agree"] = h && static_cast<std::int64_t>(*h) == f;
    } catch (const std::invalid_argument&) {
    }
  }
  return j;
}

Json eval_json(const SpaceId& space, const std::string& expression) {
  const Presentation p = element_presentation(space);
  const GradedPoly x = evaluate(parse(expression), p.alphabet(), p.aliases);
  const GradedPoly nf = p.quotient().normal_form(x);
  return Json{{"space", space_ref(space)},
              {"expression", expression},
              {"value", render(x)},
              {"degrees", x.degrees()},
              {"normal_form", render(nf)},
              {"in_ideal", nf.is_zero()}};
}

Json verdict_json(const SpaceId& source, const SpaceId& target, const Verdict& v) {
  Json trace = Json::array();
  for (const auto& c : v.trace) trace.push_back(check_json(c));
  return Json{{"source", label(source)},
              {"target", label(target)},
              {"dim", dimension(source)},
              {"verdict", to_string(v.tag)},
              {"reason", v.reason()},
              {"reason_trace", trace}};
}

Json enumeration_json(const Enumeration& e) {
  Json pairs = Json::array();
  for (const auto& p : e.pairs) pairs.push_back(verdict_json(p.source, p.target, p.verdict));
  return Json{{"format", kReportFormat},
              {"family", to_string(e.family)},
              {"bound", e.bound},
              {"pairs", pairs},
              {"summary", counts_json(e.counts)}};
}

VerifyResult run_verify(int bound, int s_max) {
  if (bound < 3) throw std::invalid_argument("verify bound must be >= 3");
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  Json failures = Json::array();
  Json pairs = Json::array();
  Json families = Json::object();

  for (auto fam : {PairFamily::IsoIso, PairFamily::IsoReal, PairFamily::RealIso}) {
    const Enumeration e = enumerate_equal_dim_pairs(fam, bound);
    families[std::string(to_string(fam))] = counts_json(e.counts);
    for (const auto& p : e.pairs) {
      Json pj = verdict_json(p.source, p.target, p.verdict);
      pj["family"] = to_string(fam);
      pairs.push_back(pj);
      if (p.verdict.tag != VerdictTag::ForcedZero)
        failures.push_back(std::string(to_string(fam)) + ": " + label(p.source) + " -> " +
                           label(p.target) + " is " + std::string(to_string(p.verdict.tag)) +
                           ", not ForcedZero");
    }
    if (e.counts.equal_height_distinct > 0)
      failures.push_back(std::string(to_string(fam)) + ": " +
                         std::to_string(e.counts.equal_height_distinct) +
                         " distinct pairs with equal dimension and equal p1 height");
  }

  const Theorem41Report t41 = theorem41_arith_check(bound);
  Json tuples = Json::array(), violations = Json::array();
  for (const auto& t : t41.tuples) tuples.push_back(tuple_json(t));
  for (const auto& t : t41.violations) {
    violations.push_back(tuple_json(t));
    std::string what;
    if (!t.same_space) what += " distinct parameters";
    if (!t.within_four) what += " |k(n-k)-l(m-l)|=" + std::to_string(std::llabs(t.kk_minus_ll)) + ">4";
    if (!t.divisible_by_four) what += " (k-l)(k+l+1)=" + std::to_string(t.product) + " not divisible by 4";
    if (!t.within_sixteen) what += " |(k-l)(k+l+1)|>16";
    failures.push_back("theorem41: " + tuple_label(t) + ":" + what);
  }
  if (!t41.k_plus_two_rejected) failures.push_back("theorem41: k = l+2 divisibility step fails");
  if (!t41.k_plus_one_parity) failures.push_back("theorem41: k = l+1 parity step fails");

  Json cases = Json::array();
  for (int l : {3, 5, 7}) {
    const auto r = case_family_check(CaseFamily{l}, s_max);
    cases.push_back({{"l", l},
                     {"k", l + 1},
                     {"s_max", s_max},
                     {"lhs_at_1", r.lhs_at_1},
                     {"rhs_at_1", r.rhs_at_1},
                     {"dimension_identity_holds", r.dimension_identity_holds},
                     {"heights_always_differ", r.heights_always_differ},
                     {"failing_s", r.failures}});
    if (!r.ok()) failures.push_back("case family l=" + std::to_string(l) + " fails");
  }

  const Theorem42Report t42 = theorem42_bound_check(bound);
  if (!t42.ok()) failures.push_back("theorem42: minimum " + std::to_string(t42.minimum) + " is not > 4");

  Json comparisons = Json::array();
  for (int s = 2; s <= 6; ++s)
    for (int m = 1; m <= s - 1; ++m)
      for (int part : {0, 1}) {
        const int n = 2 * s + part, k = 2 * m + 1;
        const schubert::Box box{m, s - 1 - m + part};
        const Presentation a = build_quotient_A(n, k);
        const auto cg = schubert::betti_and_euler(box).series;
        const auto series = poincare_polynomial(a.quotient(), 2 * cg.top_degree() + 4);
        const bool dims_ok = matches_doubled(series, cg);
        const auto h = height(a.quotient(), *a.named_element("p1"),
                              default_height_cap(2 * cg.top_degree(), 4));
        const int sh = schubert::sigma1_height(box);
        const bool height_ok = h && static_cast<int>(*h) == sh && sh == box.rows * box.width;
        comparisons.push_back({{"case", part == 0 ? "a" : "b"},
                         {"A", {n, k}},
                         {"complex_box", {box.rows, box.width}},
                         {"dims_match", dims_ok},
                         {"p1_height", h ? Json(*h) : Json(nullptr)},
                         {"sigma1_height", sh},
                         {"height_match", height_ok}});
        if (!dims_ok || !height_ok)
          failures.push_back("quotient A(" + std::to_string(n) + "," + std::to_string(k) +
                             ") vs Schubert box (" + std::to_string(box.rows) + "," +
                             std::to_string(box.width) + ")");
      }
  for (int s = 2; s <= 5; ++s)
    for (int m = 1; m <= s - 1; ++m) {
      const Presentation rg = build_real_oriented_odd(2 * s + 1, 2 * m);
      const int limit = static_cast<int>(dimension(rg.space())) + 4;
      const auto want = poincare_polynomial(rg.quotient(), limit);
      for (int part : {0, 1}) {
        const int n = 2 * s + part, k = 2 * m;
        const auto got = poincare_polynomial(build_quotient_A(n, k).quotient(), limit);
        const bool ok = got == want;
        comparisons.push_back({{"case", part == 0 ? "c" : "d"},
                         {"A", {n, k}},
                         {"real", {2 * s + 1, 2 * m}},
                         {"dims_match", ok}});
        if (!ok)
          failures.push_back("quotient A(" + std::to_string(n) + "," + std::to_string(k) +
                             ") vs RG(" + std::to_string(2 * s + 1) + "," + std::to_string(2 * m) + ")");
      }
    }

  Json heights = Json::array();
  for (int n = 3; n <= 7; ++n)
    for (int k = 2; k < n; ++k) {
      const Presentation p = build_full_isotropic(n, k);
      const auto h = height(p.quotient(), *p.named_element("p1"),
                            default_height_cap(p.quotient_top_degree(), 4));
      const std::int64_t f = p1_height_formula(IsotropicOriented{n, k});
      const bool ok = h && static_cast<std::int64_t>(*h) == f;
      heights.push_back({{"n", n}, {"k", k}, {"brute_force", h ? Json(*h) : Json(nullptr)}, {"formula", f}, {"agree", ok}});
      if (!ok) failures.push_back("height formula: (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }

  Json report{{"format", kReportFormat},
              {"bound", bound},
              {"s_max", s_max},
              {"pairs", pairs},
              {"summary", families},
              {"theorem41",
               {{"tuples_checked", t41.tuples.size()},
                {"tuples", tuples},
                {"violations", violations},
                {"k_plus_two_rejected", t41.k_plus_two_rejected},
                {"k_plus_one_parity", t41.k_plus_one_parity}}},
              {"case_families", cases},
              {"theorem42",
               {{"bound", t42.bound},
                {"minimum", t42.minimum},
                {"argmin", {t42.argmin_n, t42.argmin_k}},
                {"monotone_in_n", t42.monotone_in_n}}},
              {"quotient_comparisons", comparisons},
              {"height_formula", heights},
              {"failures", failures},
              {"ok", failures.empty()}};
  return {std::move(report), failures.empty()};
}

}  // namespace isograss
