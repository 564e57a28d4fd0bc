#include "wreath/groups/free_group.hpp"

#include <algorithm>
#include <charconv>

namespace wreath {

std::string Direction::name() const { return (sign > 0 ? "x" : "X") + std::to_string(gen); }

std::optional<Direction> Direction::parse(const std::string& token) {
  if (token.size() < 2 || (token[0] != 'x' && token[0] != 'X'))
    return std::nullopt;
  int gen = 0;
  const char* first = token.data() + 1;
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, gen);
  if (ec != std::errc() || ptr != last || gen < 1 || token[1] == '0')
    return std::nullopt;
  return Direction{gen, token[0] == 'x' ? 1 : -1};
}

std::vector<Direction> all_directions(int rank) {
  std::vector<Direction> out;
  for (std::size_t i = 0; i < static_cast<std::size_t>(2 * rank); ++i)
    out.push_back(Direction::from_index(i));
  return out;
}

FreeWord reduce(std::span<const Direction> letters) {
  FreeWord w;
  for (const Direction& d : letters) {
    if (!w.letters_.empty() && w.letters_.back() == d.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(d);
  }
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord w = *this;
  for (const Direction& d : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == d.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(d);
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(it->inverse());
  return w;
}

bool FreeWord::is_prefix_of(const FreeWord& other) const {
  return letters_.size() <= other.letters_.size() &&
         std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

std::string FreeWord::to_string() const {
  if (letters_.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i)
      s += ' ';
    s += letters_[i].name();
  }
  return s;
}

NodeType node_type(const FreeWord& w) {
  return w.empty() ? NodeType::root() : NodeType::of(w.letters().back());
}

std::vector<Direction> children_types(NodeType t, int rank) {
  std::vector<Direction> out;
  for (const Direction& d : all_directions(rank))
    if (t.is_root() || d != t.direction().inverse())
      out.push_back(d);
  return out;
}

std::vector<NodeType> all_node_types(int rank) {
  std::vector<NodeType> out{NodeType::root()};
  for (const Direction& d : all_directions(rank))
    out.push_back(NodeType::of(d));
  return out;
}

} // namespace wreath
