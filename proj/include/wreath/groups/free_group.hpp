#ifndef WREATH_GROUPS_FREE_GROUP_HPP
#define WREATH_GROUPS_FREE_GROUP_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wreath {

/// A free generator x_i (sign +1) or its inverse X_i (sign -1); gen is 1-based.
struct Direction {
  int gen = 1;
  int sign = 1;

  Direction inverse() const { return {gen, -sign}; }
  /// Position of this direction among the 2r directions: x1, X1, x2, X2, ...
  std::size_t index() const { return static_cast<std::size_t>(2 * (gen - 1) + (sign < 0 ? 1 : 0)); }
  static Direction from_index(std::size_t i) {
    return {static_cast<int>(i / 2) + 1, (i % 2 == 0) ? 1 : -1};
  }
  /// `x3` for the generator, `X3` for its inverse.
  std::string name() const;
  static std::optional<Direction> parse(const std::string& token);

  auto operator<=>(const Direction& o) const { return index() <=> o.index(); }
  bool operator==(const Direction& o) const = default;
};

std::vector<Direction> all_directions(int rank);

/// A freely reduced word; the reduced-ness invariant is maintained by every
/// constructor and operation.
class FreeWord {
public:
  FreeWord() = default;

  const std::vector<Direction>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord operator*(const FreeWord& rhs) const;
  FreeWord inverse() const;
  /// Prefix order on reduced words.
  bool is_prefix_of(const FreeWord& other) const;
  std::string to_string() const;

  auto operator<=>(const FreeWord&) const = default;
  bool operator==(const FreeWord&) const = default;

  friend FreeWord reduce(std::span<const Direction> letters);

private:
  std::vector<Direction> letters_;
};

FreeWord reduce(std::span<const Direction> letters);

/// Type of a node in the Cayley tree: the root or the last letter of its reduced word.
class NodeType {
public:
  static NodeType root() { return NodeType(); }
  static NodeType of(Direction d) { return NodeType(d); }
  /// Inverse of index(): 0 is the root, i >= 1 is Direction::from_index(i - 1).
  static NodeType from_index(std::size_t i) {
    return i == 0 ? root() : of(Direction::from_index(i - 1));
  }

  bool is_root() const { return !dir_.has_value(); }
  Direction direction() const { return *dir_; }
  std::size_t index() const { return dir_ ? dir_->index() + 1 : 0; }
  /// `1` for the root, else the direction name.
  std::string name() const { return dir_ ? dir_->name() : "1"; }

  bool operator==(const NodeType&) const = default;

private:
  NodeType() = default;
  explicit NodeType(Direction d) : dir_(d) {}
  std::optional<Direction> dir_;
};

NodeType node_type(const FreeWord& w);

/// Types of the children of a node of type t: all directions except t^-1.
std::vector<Direction> children_types(NodeType t, int rank);

/// All 2r+1 node types ordered by index (root first).
std::vector<NodeType> all_node_types(int rank);

} // namespace wreath

#endif
