#ifndef WREATH_LOOPS_AUTOMATON_HPP
#define WREATH_LOOPS_AUTOMATON_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wreath/groups/finite_group.hpp"
#include "wreath/groups/free_group.hpp"
#include "wreath/groups/tokens.hpp"

namespace wreath::loops {

using StateId = std::uint32_t;

/// An edge labeled by a single generator: a lamp value or a direction.
struct Edge {
  StateId from = 0;
  Token label;
  StateId to = 0;

  bool is_lamp() const { return std::holds_alternative<LampToken>(label); }
  bool is_direction() const { return std::holds_alternative<Direction>(label); }
  FiniteGroup::Element lamp() const { return std::get<LampToken>(label).value; }
  Direction direction() const { return std::get<Direction>(label); }
  bool operator==(const Edge&) const = default;
};

/// Automaton over H wr F_r whose edges carry single generators. Identity lamp
/// labels are allowed and stand for empty moves.
struct NormalizedAutomaton {
  std::shared_ptr<const FiniteGroup> group;
  int rank = 1;
  std::vector<std::string> state_names;
  StateId initial = 0;
  std::vector<StateId> finals;
  std::vector<Edge> edges;

  std::size_t num_states() const { return state_names.size(); }
  bool is_final(StateId q) const;
  StateId add_state(std::string name);
  /// Throws std::invalid_argument on dangling states or out-of-rank directions.
  void validate() const;
};

} // namespace wreath::loops

#endif
