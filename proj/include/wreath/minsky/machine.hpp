#ifndef WREATH_MINSKY_MACHINE_HPP
#define WREATH_MINSKY_MACHINE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wreath::minsky {

enum class Op { Inc, Dec, Zero };

std::string to_string(Op op);

struct Transition {
  std::size_t from = 0;
  int counter = 0;
  Op op = Op::Inc;
  std::size_t to = 0;
  bool operator==(const Transition&) const = default;
};

/// Two-counter machine. `side`, when present, assigns every state to Q0 or
/// Q1; states in Q0 act on counter 0 and move to Q1, and vice versa.
struct CounterMachine {
  std::vector<std::string> states;
  std::size_t initial = 0;
  std::vector<std::size_t> finals;
  std::vector<Transition> transitions;
  std::optional<std::vector<int>> side;

  std::size_t index(const std::string& name) const;
  bool is_final(std::size_t q) const;
  bool alternating() const { return side.has_value(); }
  /// Throws std::invalid_argument when an invariant fails.
  void validate() const;

  bool operator==(const CounterMachine&) const = default;
};

struct MachineConfig {
  std::size_t state = 0;
  std::uint64_t c0 = 0;
  std::uint64_t c1 = 0;

  std::uint64_t counter(int i) const { return i == 0 ? c0 : c1; }
  auto operator<=>(const MachineConfig&) const = default;
};

/// Result of firing transition t at cfg, or nothing when t is not enabled.
std::optional<MachineConfig> fire(const CounterMachine& c, const MachineConfig& cfg,
                                  std::size_t t);

/// Successors of cfg, each with the index of the transition producing it,
/// in transition order.
std::vector<std::pair<MachineConfig, std::size_t>> step(const CounterMachine& c,
                                                        const MachineConfig& cfg);

struct Computation {
  std::vector<MachineConfig> configs;
  std::vector<std::size_t> transitions;
  std::size_t steps() const { return transitions.size(); }
};

/// Shortest computation from (initial, m, n) to (final, 0, 0) with at most
/// max_steps steps. Breadth-first; ties go to the lower transition index.
std::optional<Computation> reach_final(const CounterMachine& c, std::uint64_t m, std::uint64_t n,
                                       std::size_t max_steps);

/// Equivalent machine that alternates between the counters. A state is a
/// pair (q, i) meaning "the next step acts on counter i"; a transition on
/// the other counter is wrapped as +1 on counter i, the real step, then -1 on
/// counter i. Unreachable states are dropped.
CounterMachine make_alternating(const CounterMachine& c);

} // namespace wreath::minsky

#endif
