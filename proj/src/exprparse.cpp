#include "isograss/exprparse.hpp"

#include <cctype>

namespace isograss {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(const std::vector<ExprToken>& tokens, std::size_t end) : toks_(tokens), end_(end) {}

  ExprAst run() {
    ExprAst e = expr();
    if (pos_ < toks_.size()) unexpected();
    return e;
  }

 private:
  const ExprToken* peek() const { return pos_ < toks_.size() ? &toks_[pos_] : nullptr; }
  bool at(TokenKind k) const { return peek() && peek()->kind == k; }

  [[noreturn]] void unexpected() const {
    if (!peek()) throw ParseError(ParseError::Kind::UnexpectedEnd, end_, "unexpected end of input");
    throw ParseError(ParseError::Kind::UnexpectedToken, peek()->offset,
                     "unexpected token '" + peek()->text + "'");
  }

  const ExprToken& expect(TokenKind k) {
    if (!at(k)) unexpected();
    return toks_[pos_++];
  }

  static ExprAst node(ExprAst::Kind kind, std::vector<ExprAst> children) {
    ExprAst a;
    a.kind = kind;
    a.children = std::move(children);
    return a;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const bool minus = toks_[pos_++].kind == TokenKind::Minus;
      ExprAst rhs = term();
      if (minus) rhs = node(ExprAst::Kind::Neg, {std::move(rhs)});
      lhs = node(ExprAst::Kind::Add, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprAst term() {
    ExprAst lhs = unary();
    while (at(TokenKind::Star)) {
      ++pos_;
      lhs = node(ExprAst::Kind::Mul, {std::move(lhs), unary()});
    }
    return lhs;
  }

  ExprAst unary() {
    if (at(TokenKind::Minus)) {
      ++pos_;
      return node(ExprAst::Kind::Neg, {unary()});
    }
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    if (!at(TokenKind::Caret)) return base;
    ++pos_;
    const ExprToken& t = expect(TokenKind::Integer);
    if (t.text.size() > 7 || std::stoul(t.text) > kMaxExponent)
      throw ParseError(ParseError::Kind::ExponentTooLarge, t.offset,
                       "exponent " + t.text + " exceeds " + std::to_string(kMaxExponent));
    ExprAst p = node(ExprAst::Kind::Pow, {std::move(base)});
    p.exponent = static_cast<std::uint32_t>(std::stoul(t.text));
    if (at(TokenKind::Caret)) unexpected();
    return p;
  }

  ExprAst primary() {
    const ExprToken* t = peek();
    if (!t) unexpected();
    switch (t->kind) {
      case TokenKind::Integer: {
        ++pos_;
        mpz_class num(t->text, 10), den(1);
        if (at(TokenKind::Slash)) {
          ++pos_;
          const ExprToken& d = expect(TokenKind::Integer);
          den = mpz_class(d.text, 10);
          if (den == 0) throw ParseError(ParseError::Kind::ZeroDenominator, d.offset, "zero denominator");
        }
        ExprAst a;
        a.kind = ExprAst::Kind::Num;
        a.num = make_rational(num, den);
        return a;
      }
      case TokenKind::Ident: {
        ++pos_;
        ExprAst a;
        a.kind = ExprAst::Kind::Gen;
        a.name = t->text;
        return a;
      }
      case TokenKind::LParen: {
        ++pos_;
        ExprAst inner = expr();
        expect(TokenKind::RParen);
        return inner;
      }
      default:
        unexpected();
    }
  }

  const std::vector<ExprToken>& toks_;
  std::size_t end_;
  std::size_t pos_ = 0;
};

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

}  // namespace

std::string_view to_string(TokenKind k) {
  switch (k) {
    case TokenKind::Integer: return "Int";
    case TokenKind::Slash: return "Slash";
    case TokenKind::Ident: return "Ident";
    case TokenKind::Plus: return "Plus";
    case TokenKind::Minus: return "Minus";
    case TokenKind::Star: return "Star";
    case TokenKind::Caret: return "Caret";
    case TokenKind::LParen: return "LParen";
    case TokenKind::RParen: return "RParen";
  }
  return "?";
}

std::string_view to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::UnknownCharacter: return "UnknownCharacter";
    case ParseError::Kind::UnexpectedToken: return "UnexpectedToken";
    case ParseError::Kind::UnexpectedEnd: return "UnexpectedEnd";
    case ParseError::Kind::ExponentTooLarge: return "ExponentTooLarge";
    case ParseError::Kind::ZeroDenominator: return "ZeroDenominator";
  }
  return "?";
}

ParseError::ParseError(Kind k, std::size_t off, const std::string& detail)
    : std::runtime_error(std::string(to_string(k)) + " at offset " + std::to_string(off) + ": " +
                         detail),
      kind(k),
      offset(off) {}

UnknownGenerator::UnknownGenerator(std::string n, std::vector<std::string> avail)
    : std::runtime_error("UnknownGenerator(" + n + "); available: " + join(avail)),
      name(std::move(n)),
      available(std::move(avail)) {}

std::vector<ExprToken> tokenize(std::string_view in) {
  std::vector<ExprToken> out;
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto single = [&](TokenKind k) {
      out.push_back({k, std::string(1, c), start});
      ++i;
    };
    switch (c) {
      case '/': single(TokenKind::Slash); continue;
      case '+': single(TokenKind::Plus); continue;
      case '-': single(TokenKind::Minus); continue;
      case '*': single(TokenKind::Star); continue;
      case '^': single(TokenKind::Caret); continue;
      case '(': single(TokenKind::LParen); continue;
      case ')': single(TokenKind::RParen); continue;
      default: break;
    }
    if (is_digit(c)) {
      while (i < in.size() && is_digit(in[i])) ++i;
      out.push_back({TokenKind::Integer, std::string(in.substr(start, i - start)), start});
      continue;
    }
    if (c == 'e' || ((c == 'p' || c == 'c') && i + 1 < in.size() && is_digit(in[i + 1]))) {
      ++i;
      if (c != 'e')
        while (i < in.size() && is_digit(in[i])) ++i;
      if (i < in.size() && in[i] == '\'') ++i;
      out.push_back({TokenKind::Ident, std::string(in.substr(start, i - start)), start});
      continue;
    }
    throw ParseError(ParseError::Kind::UnknownCharacter, start,
                     "unknown character '" + std::string(1, c) + "'");
  }
  return out;
}

ExprAst parse(const std::vector<ExprToken>& tokens, std::size_t input_length) {
  return Parser(tokens, input_length).run();
}

ExprAst parse(std::string_view input) { return parse(tokenize(input), input.size()); }

std::string to_string(const ExprAst& a) {
  switch (a.kind) {
    case ExprAst::Kind::Num: return "Num " + to_string(a.num);
    case ExprAst::Kind::Gen: return "Gen " + a.name;
    case ExprAst::Kind::Neg: return "Neg(" + to_string(a.children[0]) + ")";
    case ExprAst::Kind::Add:
      return "Add(" + to_string(a.children[0]) + ", " + to_string(a.children[1]) + ")";
    case ExprAst::Kind::Mul:
      return "Mul(" + to_string(a.children[0]) + ", " + to_string(a.children[1]) + ")";
    case ExprAst::Kind::Pow:
      return "Pow(" + to_string(a.children[0]) + ", " + std::to_string(a.exponent) + ")";
  }
  return "?";
}

GradedPoly evaluate(const ExprAst& a, const AlphabetPtr& alphabet,
                    const std::map<std::string, GradedPoly>& aliases) {
  switch (a.kind) {
    case ExprAst::Kind::Num: return GradedPoly::constant(alphabet, a.num);
    case ExprAst::Kind::Gen: {
      if (alphabet->index_of(a.name)) return GradedPoly::generator(alphabet, a.name);
      if (auto it = aliases.find(a.name); it != aliases.end()) return it->second;
      std::vector<std::string> names;
      for (const auto& g : alphabet->entries()) names.push_back(g.name);
      for (const auto& [n, _] : aliases) names.push_back(n);
      throw UnknownGenerator(a.name, names);
    }
    case ExprAst::Kind::Neg: return -evaluate(a.children[0], alphabet, aliases);
    case ExprAst::Kind::Add:
      return evaluate(a.children[0], alphabet, aliases) + evaluate(a.children[1], alphabet, aliases);
    case ExprAst::Kind::Mul:
      return evaluate(a.children[0], alphabet, aliases) * evaluate(a.children[1], alphabet, aliases);
    case ExprAst::Kind::Pow: return pow(evaluate(a.children[0], alphabet, aliases), a.exponent);
  }
  throw std::logic_error("bad expression node");
}

}  // namespace isograss
