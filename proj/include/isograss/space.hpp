#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace isograss {

/// Oriented k-dimensional isotropic subspaces of a symplectic R^{2n},
/// U(n)/(SO(k) x U(n-k)). Note `n` is half the ambient dimension.
struct IsotropicOriented {
  int n = 1;
  int k = 1;
  auto operator<=>(const IsotropicOriented&) const = default;
};

/// Oriented l-planes in R^m, SO(m)/(SO(l) x SO(m-l)).
struct RealOriented {
  int m = 2;
  int l = 1;
  auto operator<=>(const RealOriented&) const = default;
};

/// Complex k-planes in C^n.
struct ComplexGrass {
  int n = 1;
  int k = 0;
  auto operator<=>(const ComplexGrass&) const = default;
};

struct Sphere {
  int d = 1;
  auto operator<=>(const Sphere&) const = default;
};

using SpaceId = std::variant<IsotropicOriented, RealOriented, ComplexGrass, Sphere>;

class SpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checked constructors; throw SpaceError when the parameter bounds fail.
SpaceId isotropic(int n, int k);
SpaceId real_oriented(int m, int l);
SpaceId complex_grass(int n, int k);
SpaceId sphere(int d);

void validate(const SpaceId& space);

/// Parses `I:2n,k`, `RG:m,l`, `CG:n,k` or `S:d`. For the isotropic family the
/// ambient dimension 2n is written literally, so `I:10,3` has n = 5.
SpaceId parse_space(std::string_view spec);

/// Inverse of parse_space.
std::string label(const SpaceId& space);

std::string_view kind_name(const SpaceId& space);

/// Manifold dimension. Isotropic: 2k(n-k) + k(k+1)/2; real: l(m-l);
/// complex: 2k(n-k); sphere: d.
std::int64_t dimension(const SpaceId& space);

}  // namespace isograss
