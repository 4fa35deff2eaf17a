#include "isograss/polyring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace isograss {

Rational make_rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("missing digits");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw std::invalid_argument("malformed rational: " + std::string(s));
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  return make_rational(parse_int(text.substr(0, slash), true),
                       parse_int(text.substr(slash + 1), false));
}

GeneratorAlphabet::GeneratorAlphabet(std::vector<Generator> entries)
    : entries_(std::move(entries)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : entries_) {
    if (g.name.empty()) throw std::invalid_argument("empty generator name");
    if (g.degree < 1)
      throw std::invalid_argument("generator " + g.name + " has degree < 1");
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("duplicate generator " + g.name);
  }
}

std::optional<std::size_t> GeneratorAlphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name) return i;
  return std::nullopt;
}

AlphabetPtr make_alphabet(std::vector<Generator> entries) {
  return std::make_shared<const GeneratorAlphabet>(std::move(entries));
}

Monomial::Monomial(std::vector<std::uint32_t> exponents, const GeneratorAlphabet& alphabet)
    : exponents_(std::move(exponents)) {
  if (exponents_.size() != alphabet.size())
    throw std::invalid_argument("exponent vector does not match alphabet");
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    degree_ += static_cast<int>(exponents_[i]) * alphabet[i].degree;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) r.exponents_[i] += other.exponents_[i];
  r.degree_ += other.degree_;
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  for (std::size_t i = exponents_.size(); i-- > 0;)
    if (auto c = exponents_[i] <=> other.exponents_[i]; c != 0) return c;
  return exponents_.size() <=> other.exponents_.size();
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

GradedPoly::GradedPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
}

GradedPoly GradedPoly::constant(AlphabetPtr alphabet, const Rational& c) {
  GradedPoly p(alphabet);
  p.add_term(Monomial(alphabet->size()), c);
  return p;
}

GradedPoly GradedPoly::generator(AlphabetPtr alphabet, std::string_view name) {
  auto idx = alphabet->index_of(name);
  if (!idx) throw std::invalid_argument("unknown generator " + std::string(name));
  std::vector<std::uint32_t> e(alphabet->size(), 0);
  e[*idx] = 1;
  Monomial m(std::move(e), *alphabet);
  return monomial(std::move(alphabet), std::move(m));
}

GradedPoly GradedPoly::monomial(AlphabetPtr alphabet, Monomial m, const Rational& c) {
  GradedPoly p(std::move(alphabet));
  p.add_term(m, c);
  return p;
}

std::optional<int> GradedPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  if (terms_.rbegin()->first.degree() != d) return std::nullopt;
  return d;
}

bool GradedPoly::is_homogeneous() const {
  return terms_.empty() || homogeneous_degree().has_value();
}

std::vector<int> GradedPoly::degrees() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_)
    if (out.empty() || out.back() != m.degree()) out.push_back(m.degree());
  return out;
}

GradedPoly GradedPoly::homogeneous_part(int d) const {
  GradedPoly out(alphabet_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.exponents().size() != alphabet_->size())
    throw IncompatibleRings("monomial does not belong to this alphabet");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

void GradedPoly::require_same_ring(const GradedPoly& other) const {
  if (!same_alphabet(alphabet_, other.alphabet_))
    throw IncompatibleRings("polynomials belong to different generator alphabets");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.require_same_ring(b);
  GradedPoly r(a.alphabet_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

bool GradedPoly::operator==(const GradedPoly& other) const {
  return same_alphabet(alphabet_, other.alphabet_) && terms_ == other.terms_;
}

GradedPoly add(const GradedPoly& a, const GradedPoly& b) { return a + b; }
GradedPoly mul(const GradedPoly& a, const GradedPoly& b) { return a * b; }

GradedPoly pow(const GradedPoly& a, std::uint64_t t) {
  GradedPoly result = GradedPoly::constant(a.alphabet(), 1);
  GradedPoly base = a;
  while (t > 0) {
    if (t & 1u) result = result * base;
    t >>= 1;
    if (t > 0) base = base * base;
  }
  return result;
}

std::vector<Monomial> monomials_of_degree(const GeneratorAlphabet& alphabet, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<std::uint32_t> e(alphabet.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == alphabet.size()) {
      if (remaining == 0) out.emplace_back(e, alphabet);
      return;
    }
    const int g = alphabet[i].degree;
    for (int t = 0; t * g <= remaining; ++t) {
      e[i] = static_cast<std::uint32_t>(t);
      rec(i + 1, remaining - t * g);
    }
    e[i] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::string render(const Monomial& m, const GeneratorAlphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    const auto k = m.exponent(i);
    if (k == 0) continue;
    if (!out.empty()) out += '*';
    out += alphabet[i].name;
    if (k > 1) out += '^' + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

std::string render(const GradedPoly& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << '*';
      os << render(m, *x.alphabet());
    }
  }
  return os.str();
}

}  // namespace isograss
