#ifndef WREATH_LOOPS_LOOPS_HPP
#define WREATH_LOOPS_LOOPS_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "wreath/loops/automaton.hpp"

namespace wreath::loops {

/// For every node type t, the pairs (p, q) such that some well-nested
/// computation in a node of type t starts in p and ends in q.
class ReturnRelations {
public:
  ReturnRelations(std::size_t num_states, int rank);

  bool contains(NodeType t, StateId p, StateId q) const {
    return bits_[t.index()][p * n_ + q];
  }
  std::size_t num_states() const { return n_; }
  int rank() const { return rank_; }
  /// Kleene passes that changed at least one relation.
  std::size_t rounds() const { return rounds_; }
  std::size_t size(NodeType t) const;

private:
  friend ReturnRelations return_relations(const NormalizedAutomaton& a);
  std::size_t n_;
  int rank_;
  std::size_t rounds_ = 0;
  std::vector<std::vector<bool>> bits_;
};

/// Least fixpoint of: identity pairs; lamp edges; one-level descents
/// (p,d,p') (p',q') in Z_d (q',d^-1,q) for d a child type; composition.
ReturnRelations return_relations(const NormalizedAutomaton& a);

/// A loop (p, d, q): leave through d from p and come back through d^-1 into q.
struct LoopLetter {
  StateId p = 0;
  Direction d;
  StateId q = 0;

  auto operator<=>(const LoopLetter& o) const {
    if (auto c = d <=> o.d; c != 0)
      return c;
    if (auto c = p <=> o.p; c != 0)
      return c;
    return q <=> o.q;
  }
  bool operator==(const LoopLetter&) const = default;
};

/// Loop alphabets indexed by NodeType::index(), each sorted.
using LoopAlphabets = std::vector<std::vector<LoopLetter>>;

/// (p,d,q) belongs to the alphabet of t iff d is a child type of t and there
/// are edges (p,d,p'), (q',d^-1,q) with (p',q') in Z_d.
LoopAlphabets compute_X(const NormalizedAutomaton& a, const ReturnRelations& z);
LoopAlphabets compute_X(const NormalizedAutomaton& a);

} // namespace wreath::loops

#endif
