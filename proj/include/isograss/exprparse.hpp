// Ring-element expressions typed on the command line.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' uint)?
//   primary := int ('/' int)? | ident | '(' expr ')'
//
// Identifiers are `e`, `p<digits>` or `c<digits>`, optionally followed by one
// `'` (the generators of a complementary bundle). `a^2^3` is rejected and
// exponents are capped at 10^6.

#pragma once

#include "isograss/polyring.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isograss {

enum class TokenKind { Integer, Slash, Ident, Plus, Minus, Star, Caret, LParen, RParen };

std::string_view to_string(TokenKind k);

struct ExprToken {
  TokenKind kind;
  std::string text;
  std::size_t offset = 0;  // byte offset into the input
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { UnknownCharacter, UnexpectedToken, UnexpectedEnd, ExponentTooLarge, ZeroDenominator };
  ParseError(Kind kind, std::size_t offset, const std::string& detail);

  Kind kind;
  std::size_t offset;
};

std::string_view to_string(ParseError::Kind k);

class UnknownGenerator : public std::runtime_error {
 public:
  UnknownGenerator(std::string name, std::vector<std::string> available);

  std::string name;
  std::vector<std::string> available;
};

inline constexpr std::uint32_t kMaxExponent = 1'000'000;

std::vector<ExprToken> tokenize(std::string_view input);

struct ExprAst {
  enum class Kind { Num, Gen, Neg, Add, Mul, Pow };
  Kind kind = Kind::Num;
  Rational num;                   // Num
  std::string name;               // Gen
  std::uint32_t exponent = 0;     // Pow
  std::vector<ExprAst> children;  // Neg: 1, Add/Mul: 2, Pow: 1
};

/// Throws ParseError; positions refer to byte offsets of the original input,
/// `UnexpectedEnd` reports the input length.
ExprAst parse(const std::vector<ExprToken>& tokens, std::size_t input_length);
ExprAst parse(std::string_view input);

/// `Pow(Add(Gen p1, Gen c2), 2)`.
std::string to_string(const ExprAst& ast);

/// Builds the polynomial over `alphabet`; names not in the alphabet are looked
/// up in `aliases`. Throws UnknownGenerator.
GradedPoly evaluate(const ExprAst& ast, const AlphabetPtr& alphabet,
                    const std::map<std::string, GradedPoly>& aliases = {});

}  // namespace isograss
