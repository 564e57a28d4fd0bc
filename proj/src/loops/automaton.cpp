#include "wreath/loops/automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace wreath::loops {

bool NormalizedAutomaton::is_final(StateId q) const {
  return std::find(finals.begin(), finals.end(), q) != finals.end();
}

StateId NormalizedAutomaton::add_state(std::string name) {
  state_names.push_back(std::move(name));
  return static_cast<StateId>(state_names.size() - 1);
}

void NormalizedAutomaton::validate() const {
  if (!group)
    throw std::invalid_argument("automaton has no lamp group");
  if (rank < 1)
    throw std::invalid_argument("rank must be at least 1");
  const std::size_t n = num_states();
  if (n == 0 || initial >= n)
    throw std::invalid_argument("initial state out of range");
  for (StateId f : finals)
    if (f >= n)
      throw std::invalid_argument("final state out of range");
  for (const Edge& e : edges) {
    if (e.from >= n || e.to >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.is_direction() && (e.direction().gen < 1 || e.direction().gen > rank))
      throw std::invalid_argument("direction " + e.direction().name() + " exceeds rank " +
                                  std::to_string(rank));
    if (e.is_lamp() && e.lamp() >= group->order())
      throw std::invalid_argument("lamp value outside the group");
  }
}

} // namespace wreath::loops
