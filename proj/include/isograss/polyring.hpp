// Exact rational scalars and commutative graded polynomials over a named
// generator alphabet.
//
// Every generator carries a positive integer degree. Monomials are ordered
// first by weighted degree; ties are broken lexicographically on the exponent
// vector read from the LAST alphabet entry backwards, so generators declared
// later are more significant. Linear algebra in idealalg eliminates the most
// significant monomials first, which is why presentation builders list the
// classes they want to keep (p's, e) before the ones they want to eliminate.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isograss {

using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const mpz_class& num, const mpz_class& den);

/// `a` or `a/b`.
std::string to_string(const Rational& q);

/// Inverse of to_string. Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two polynomials over different alphabets are combined.
class IncompatibleRings : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

struct Generator {
  std::string name;
  int degree = 1;

  bool operator==(const Generator&) const = default;
};

class GeneratorAlphabet {
 public:
  GeneratorAlphabet() = default;
  /// Throws std::invalid_argument on duplicate names or degrees < 1.
  explicit GeneratorAlphabet(std::vector<Generator> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Generator& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Generator> entries() const { return entries_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const GeneratorAlphabet&) const = default;

 private:
  std::vector<Generator> entries_;
};

using AlphabetPtr = std::shared_ptr<const GeneratorAlphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> entries);

class Monomial {
 public:
  /// The unit monomial over an alphabet with `nvars` entries.
  explicit Monomial(std::size_t nvars = 0) : exponents_(nvars, 0) {}
  Monomial(std::vector<std::uint32_t> exponents, const GeneratorAlphabet& alphabet);

  std::span<const std::uint32_t> exponents() const { return exponents_; }
  std::uint32_t exponent(std::size_t i) const { return exponents_[i]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  /// Graded order described at the top of this header.
  std::strong_ordering operator<=>(const Monomial& other) const;

 private:
  std::vector<std::uint32_t> exponents_;
  int degree_ = 0;
};

class GradedPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit GradedPoly(AlphabetPtr alphabet);

  static GradedPoly constant(AlphabetPtr alphabet, const Rational& c);
  static GradedPoly generator(AlphabetPtr alphabet, std::string_view name);
  static GradedPoly monomial(AlphabetPtr alphabet, Monomial m, const Rational& c = 1);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Degree shared by every term; nullopt for zero or inhomogeneous values.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  /// Sorted, distinct degrees occurring in the polynomial.
  std::vector<int> degrees() const;
  GradedPoly homogeneous_part(int d) const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const Rational& c);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }

  bool operator==(const GradedPoly& other) const;

 private:
  void require_same_ring(const GradedPoly& other) const;

  AlphabetPtr alphabet_;
  Terms terms_;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

GradedPoly add(const GradedPoly& a, const GradedPoly& b);
GradedPoly mul(const GradedPoly& a, const GradedPoly& b);
GradedPoly pow(const GradedPoly& a, std::uint64_t t);

/// All monomials of weighted degree exactly d, ascending.
std::vector<Monomial> monomials_of_degree(const GeneratorAlphabet& alphabet, int d);

/// Canonical text: terms in descending order, `coef*name^k*...`, e.g.
/// `c2^2 + 2*c2*p1 + p1^2`. The zero polynomial renders as `0`.
std::string render(const GradedPoly& x);
std::string render(const Monomial& m, const GeneratorAlphabet& alphabet);

}  // namespace isograss
