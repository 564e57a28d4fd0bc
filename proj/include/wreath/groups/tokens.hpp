#ifndef WREATH_GROUPS_TOKENS_HPP
#define WREATH_GROUPS_TOKENS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wreath/groups/wreath.hpp"

namespace wreath {

class UnknownToken : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LampToken {
  FiniteGroup::Element value = 0;
  bool operator==(const LampToken&) const = default;
};

/// A monoid generator of H wr F_r: a cursor move or a lamp multiplication.
using Token = std::variant<Direction, LampToken>;
using TokenWord = std::vector<Token>;

LampFreeElement token_element(const LampFreeGroup& g, const Token& t);

/// Left-to-right product of the generator embeddings.
LampFreeElement eval_word(const LampFreeGroup& g, std::span<const Token> tokens);

/// Parses `x1 g:t X2 ...`. Throws UnknownToken on lamp names missing from H
/// or on directions beyond the rank.
TokenWord parse_tokens(const std::string& text, const FiniteGroup& h, int rank);
Token parse_token(const std::string& token, const FiniteGroup& h, int rank);
std::string format_token(const Token& t, const FiniteGroup& h);
std::string format_tokens(std::span<const Token> tokens, const FiniteGroup& h);

/// Token word for the inverse element.
TokenWord invert_tokens(std::span<const Token> tokens, const FiniteGroup& h);

/// Names of the free abelian generators of Z^Sigma, in index order.
class SymbolTable {
public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(const std::string& name) const;
  bool contains(const std::string& name) const;

  bool operator==(const SymbolTable&) const = default;

private:
  std::vector<std::string> names_;
};

/// Evaluates a word over Sigma and the cursor generator `a` in Z^Sigma wr Z.
/// Tokens are whitespace separated, each `name` or `name^k` with k a
/// (possibly negative) integer, e.g. `a q0 a^2 c^3 a^4 c^2 a^-6`.
VectorLineElement eval_line_word(const VectorLineGroup& g, const SymbolTable& sigma,
                                 const std::string& text);

} // namespace wreath

#endif
