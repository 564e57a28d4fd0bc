#include "wreath/groups/tokens.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace wreath {

LampFreeElement token_element(const LampFreeGroup& g, const Token& t) {
  if (const auto* d = std::get_if<Direction>(&t)) {
    const Direction letter[] = {*d};
    return g.move(reduce(letter));
  }
  return g.lamp(std::get<LampToken>(t).value);
}

LampFreeElement eval_word(const LampFreeGroup& g, std::span<const Token> tokens) {
  LampFreeElement acc = g.identity();
  for (const Token& t : tokens)
    acc = g.mul(acc, token_element(g, t));
  return acc;
}

Token parse_token(const std::string& token, const FiniteGroup& h, int rank) {
  if (token.rfind("g:", 0) == 0) {
    auto e = h.find(token.substr(2));
    if (!e)
      throw UnknownToken("unknown lamp name '" + token.substr(2) + "'");
    return LampToken{*e};
  }
  auto d = Direction::parse(token);
  if (!d)
    throw UnknownToken("unknown token '" + token + "'");
  if (d->gen > rank)
    throw UnknownToken("direction '" + token + "' exceeds rank " + std::to_string(rank));
  return *d;
}

TokenWord parse_tokens(const std::string& text, const FiniteGroup& h, int rank) {
  std::istringstream in(text);
  TokenWord out;
  for (std::string tok; in >> tok;)
    out.push_back(parse_token(tok, h, rank));
  return out;
}

std::string format_token(const Token& t, const FiniteGroup& h) {
  if (const auto* d = std::get_if<Direction>(&t))
    return d->name();
  return "g:" + h.element_name(std::get<LampToken>(t).value);
}

std::string format_tokens(std::span<const Token> tokens, const FiniteGroup& h) {
  std::string s;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i)
      s += ' ';
    s += format_token(tokens[i], h);
  }
  return s;
}

TokenWord invert_tokens(std::span<const Token> tokens, const FiniteGroup& h) {
  TokenWord out;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    if (const auto* d = std::get_if<Direction>(&*it))
      out.push_back(d->inverse());
    else
      out.push_back(LampToken{h.inv(std::get<LampToken>(*it).value)});
  }
  return out;
}

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
    throw std::invalid_argument("symbol names must be distinct");
}

std::size_t SymbolTable::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw UnknownToken("unknown symbol '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

bool SymbolTable::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

VectorLineElement eval_line_word(const VectorLineGroup& g, const SymbolTable& sigma,
                                 const std::string& text) {
  std::istringstream in(text);
  VectorLineElement acc = g.identity();
  for (std::string tok; in >> tok;) {
    std::string name = tok;
    std::int64_t k = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      const char* first = tok.data() + caret + 1;
      const char* last = tok.data() + tok.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc() || ptr != last)
        throw UnknownToken("bad exponent in '" + tok + "'");
    }
    if (name == "a") {
      acc = g.mul(acc, g.move(k));
    } else {
      acc = g.mul(acc, g.lamp(g.lamp_ops().unit(sigma.index(name), k)));
    }
  }
  return acc;
}

} // namespace wreath
