// JSON documents shared by the C API and the command-line tool. Key order is
// fixed so identical inputs produce byte-identical output.

#pragma once

#include "isograss/obstruction.hpp"
#include "isograss/presentations.hpp"
#include "isograss/space.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace isograss {

using Json = nlohmann::ordered_json;

inline constexpr const char* kPresentationFormat = "iso-grass/presentation@1";
inline constexpr const char* kReportFormat = "iso-grass/report@1";

Json space_json(const SpaceId& space);

/// presentation@1. The trace section (sieve steps plus the comparison with
/// the literal consecutive-odd exterior formula) is included on request.
Json presentation_json(const Presentation& p, bool with_trace);

/// Schubert summary for a complex Grassmannian: box, partitions per degree,
/// Betti numbers, Euler characteristic and sigma_1 height.
Json complex_summary_json(const ComplexGrass& g);

Json poincare_json(const SpaceId& space);

/// Brute-force height of a parsed element. cap = 0 selects the default cap
/// from the quotient's top degree. When the expression is exactly `p1` the
/// closed formula and an agreement flag are added.
Json height_json(const SpaceId& space, const std::string& expression, std::size_t cap);

Json eval_json(const SpaceId& space, const std::string& expression);

Json verdict_json(const SpaceId& source, const SpaceId& target, const Verdict& v);

/// report@1 for one family.
Json enumeration_json(const Enumeration& e);

struct VerifyResult {
  Json report;
  bool ok = false;
};

/// Every family enumeration, the arithmetic checks, the case families
/// l = 3, 5, 7, the dimension-bound scan, the Schubert and real-Grassmannian
/// comparisons of the quotients and the p1 height formula against brute force.
VerifyResult run_verify(int bound, int s_max);

}  // namespace isograss
