#include "isograss/space.hpp"

#include "isograss/series.hpp"
#include "overloaded.hpp"

#include <charconv>
#include <vector>

namespace isograss {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw SpaceError(msg); }

std::vector<int> parse_ints(std::string_view body, std::string_view spec) {
  std::vector<int> out;
  while (true) {
    auto comma = body.find(',');
    auto piece = body.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
      bad("malformed space spec '" + std::string(spec) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

SpaceId isotropic(int n, int k) {
  SpaceId s = IsotropicOriented{n, k};
  validate(s);
  return s;
}
SpaceId real_oriented(int m, int l) {
  SpaceId s = RealOriented{m, l};
  validate(s);
  return s;
}
SpaceId complex_grass(int n, int k) {
  SpaceId s = ComplexGrass{n, k};
  validate(s);
  return s;
}
SpaceId sphere(int d) {
  SpaceId s = Sphere{d};
  validate(s);
  return s;
}

void validate(const SpaceId& space) {
  std::visit(overloaded{
                 [](const IsotropicOriented& s) {
                   if (s.n < 1 || s.k < 1 || s.k > s.n)
                     bad("isotropic Grassmannian needs n >= 1 and 1 <= k <= n");
                 },
                 [](const RealOriented& s) {
                   if (s.m < 2 || s.l < 1 || s.l > s.m - 1)
                     bad("oriented real Grassmannian needs m >= 2 and 1 <= l <= m-1");
                 },
                 [](const ComplexGrass& s) {
                   if (s.n < 1 || s.k < 0 || s.k > s.n)
                     bad("complex Grassmannian needs n >= 1 and 0 <= k <= n");
                 },
                 [](const Sphere& s) {
                   if (s.d < 1) bad("sphere dimension must be >= 1");
                 },
             },
             space);
}

SpaceId parse_space(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) bad("space spec '" + std::string(spec) + "' lacks ':'");
  const auto tag = spec.substr(0, colon);
  const auto args = parse_ints(spec.substr(colon + 1), spec);
  auto want = [&](std::size_t count) {
    if (args.size() != count)
      bad("space spec '" + std::string(spec) + "' expects " + std::to_string(count) +
          " parameter(s)");
  };
  if (tag == "I") {
    want(2);
    if (args[0] % 2 != 0 || args[0] < 2)
      bad("isotropic spec takes the even ambient dimension 2n, got " + std::to_string(args[0]));
    return isotropic(args[0] / 2, args[1]);
  }
  if (tag == "RG") {
    want(2);
    return real_oriented(args[0], args[1]);
  }
  if (tag == "CG") {
    want(2);
    return complex_grass(args[0], args[1]);
  }
  if (tag == "S") {
    want(1);
    return sphere(args[0]);
  }
  bad("unknown space kind '" + std::string(tag) + "' (expected I, RG, CG or S)");
}

std::string label(const SpaceId& space) {
  return std::visit(
      overloaded{
          [](const IsotropicOriented& s) {
            return "I:" + std::to_string(2 * s.n) + "," + std::to_string(s.k);
          },
          [](const RealOriented& s) {
            return "RG:" + std::to_string(s.m) + "," + std::to_string(s.l);
          },
          [](const ComplexGrass& s) {
            return "CG:" + std::to_string(s.n) + "," + std::to_string(s.k);
          },
          [](const Sphere& s) { return "S:" + std::to_string(s.d); },
      },
      space);
}

std::string_view kind_name(const SpaceId& space) {
  static constexpr std::string_view names[] = {"IsotropicOriented", "RealOriented",
                                                "ComplexGrass", "Sphere"};
  return names[space.index()];
}

std::int64_t dimension(const SpaceId& space) {
  return std::visit(
      overloaded{
          [](const IsotropicOriented& s) {
            const std::int64_t n = s.n, k = s.k;
            return checked_add(checked_mul(2 * k, n - k), k * (k + 1) / 2);
          },
          [](const RealOriented& s) {
            return checked_mul(s.l, static_cast<std::int64_t>(s.m) - s.l);
          },
          [](const ComplexGrass& s) {
            return checked_mul(2 * static_cast<std::int64_t>(s.k), s.n - s.k);
          },
          [](const Sphere& s) { return static_cast<std::int64_t>(s.d); },
      },
      space);
}

}  // namespace isograss
