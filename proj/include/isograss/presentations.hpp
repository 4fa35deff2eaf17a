// Ring presentations for oriented isotropic Grassmannians, oriented real
// Grassmannians with odd ambient dimension, and spheres.
//
// The rational cohomology of the isotropic Grassmannian U(n)/(SO(k) x U(n-k))
// is computed from the fibration U(n) -> I -> BSO(k) x BU(n-k). The fiber class
// x_{2i-1} transgresses to the i-th Chern class of (xi_k (x) C) + gamma_{n-k},
//
//     d(x_{2i-1}) = sum_{j=0}^{[i/2]} p_j c_{i-2j},
//
// where p_j are Pontrjagin classes of xi_k (p_m = e^2 when k = 2m) and c_t are
// Chern classes of gamma_{n-k}. The survivor sieve walks i = 1..n: a
// differential that is nonzero modulo the earlier ones becomes a relation,
// one that vanishes leaves an exterior generator of degree 2i-1.

#pragma once

#include "isograss/idealalg.hpp"
#include "isograss/polyring.hpp"
#include "isograss/space.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isograss {

class UnsupportedSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TopDegreeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SieveOutcome { Relation, Survivor, ConsumedEliminator };

std::string_view to_string(SieveOutcome o);

struct SieveStep {
  int index = 0;  // i, the fiber class is x_{2i-1}
  GradedPoly differential;
  GradedPoly reduction;  // normal form modulo the previously accepted relations
  SieveOutcome outcome = SieveOutcome::Relation;
};

struct SieveTrace {
  std::vector<SieveStep> steps;
};

struct SieveResult {
  AlphabetPtr alphabet;  // p's (or p's and e), then c_1..c_{n-k}
  std::vector<GradedPoly> relations;
  std::vector<int> exterior;
  SieveTrace trace;
};

class Presentation {
 public:
  /// Throws std::invalid_argument when an exterior degree is not a positive
  /// odd integer or `bundles` does not match the alphabet.
  Presentation(SpaceId space, AlphabetPtr alphabet, std::vector<GradedPoly> relations,
               std::vector<int> exterior_degrees, std::vector<std::string> bundles);

  const SpaceId& space() const { return space_; }
  const AlphabetPtr& alphabet() const { return ring_.alphabet(); }
  const std::vector<GradedPoly>& relations() const { return ring_.ideal().relations(); }
  const std::vector<int>& exterior_degrees() const { return exterior_; }
  /// Originating bundle per generator, parallel to the alphabet.
  const std::vector<std::string>& bundles() const { return bundles_; }
  const QuotientRing& quotient() const { return ring_; }

  /// Same ring (sharing its slice cache) with different exterior degrees.
  Presentation with_exterior(std::vector<int> exterior_degrees) const;

  /// Top nonzero degree of the polynomial quotient, searched from
  /// dimension(space) down.
  int quotient_top_degree() const;
  /// Quotient top degree plus the exterior degrees.
  std::int64_t top_degree() const;
  /// Poincaré polynomial of quotient (x) exterior algebra.
  PoincareSeries poincare() const;
  /// The element a name denotes: generator or alias.
  std::optional<GradedPoly> named_element(std::string_view name) const;

  /// Names that are not generators but denote ring elements, e.g. p1 := e^2
  /// when k = 2.
  std::map<std::string, GradedPoly> aliases;
  /// Present for isotropic spaces.
  std::optional<SieveTrace> trace;

 private:
  SpaceId space_;
  QuotientRing ring_;
  std::vector<int> exterior_;
  std::vector<std::string> bundles_;
};

struct FactSheet {
  SpaceId space;
  int h1_rank = 0;
  int h4_rank = 0;
  std::optional<std::string> h4_generator_name;
  /// Whether the space is orientable (all variants here are).
  bool orientable = true;
  /// For isotropic spaces: orientability of the unoriented companion
  /// I_{2n,k}, which holds iff k is odd.
  std::optional<bool> unoriented_companion_orientable;
  std::optional<Sphere> sphere_equivalent;
  std::string note;
};

/// The sieve alphabet for (n, k): p_1..p_m (k = 2m+1) or p_1..p_{m-1}, e
/// (k = 2m), followed by c_1..c_{n-k}.
AlphabetPtr sieve_alphabet(int n, int k);

/// sum_{j=0}^{[i/2]} p_j c_{i-2j} with p_0 = c_0 = 1, c_t = 0 for t > n-k,
/// p_j = 0 beyond the rank of BSO(k), p_m = e^2 for k = 2m. Terms whose
/// generator is absent from `alphabet` vanish, which is how the A(n,k)
/// builder drops odd Chern classes.
GradedPoly chern_image(int i, int n, int k, const AlphabetPtr& alphabet);

/// chern_image over sieve_alphabet(n, k).
GradedPoly differential(int i, int n, int k);

SieveResult survivor_sieve(int n, int k);

/// A(n,k): the sieve quotient with odd Chern classes eliminated, over
/// p's (or p's and e) and c_2, c_4, ..., c_{2[(n-k)/2]}.
Presentation build_quotient_A(int n, int k);

/// A(n,k) tensored with the sieve's exterior algebra. Throws
/// TopDegreeMismatch when the top degree is not dim(I_{2n,k}).
Presentation build_full_isotropic(int n, int k);

/// H*(BSO(l) x BSO(m-l)) / (total Pontrjagin class = 1), m odd, 2 <= l <= m-2.
/// Throws UnsupportedSpace for even m.
Presentation build_real_oriented_odd(int m, int l);

/// Q[e]/(e^2) with e in degree d for even d; Q with one exterior class of
/// degree d for odd d.
Presentation build_sphere(int d);

/// Dispatches on the space, normalizing sphere-equivalent spaces to spheres.
/// Throws UnsupportedSpace for I_{2n,n}, real Grassmannians with even m (other
/// than sphere cases) and complex Grassmannians.
Presentation presentation_for(const SpaceId& space);

FactSheet fact_sheet(const SpaceId& space);

/// Literal consecutive-odd reading of the exterior degree set
/// {4[(n-k+1)/2]+1, ..., 2n-3 (n, k even) or 2n-1}; for comparison with the
/// sieve only.
std::vector<int> remark_exterior_formula(int n, int k);

}  // namespace isograss
