#ifndef WREATH_AUTOMATA_NFA_HPP
#define WREATH_AUTOMATA_NFA_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath::automata {

using Symbol = std::uint32_t;
using State = std::uint32_t;
using Word = std::vector<Symbol>;

inline constexpr Symbol kEpsilon = std::numeric_limits<Symbol>::max();
inline constexpr std::size_t kDefaultStateCap = 2'000'000;

/// Raised when a lazy construction explores more states than its cap allows.
/// Never a wrong answer, only an absent one.
class ResourceExhausted : public std::runtime_error {
public:
  explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

class AlphabetMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An automaton whose states are discovered on demand. Successor sets are
/// already closed under epsilon moves. Implementations must be safe to call
/// from several threads.
class NfaLike {
public:
  virtual ~NfaLike() = default;
  virtual std::size_t alphabet_size() const = 0;
  /// Epsilon-closed, sorted, duplicate free.
  virtual std::vector<State> initial_states() = 0;
  /// Appends the epsilon-closed successors of s on a (duplicates allowed).
  virtual void successors(State s, Symbol a, std::vector<State>& out) = 0;
  virtual bool is_final(State s) = 0;
};

struct Transition {
  Symbol symbol;
  State target;
};

/// An explicit nondeterministic automaton with epsilon transitions.
class Nfa {
public:
  explicit Nfa(std::size_t alphabet_size = 0) : alphabet_size_(alphabet_size) {}

  State add_state(bool final = false);
  void add_transition(State from, Symbol symbol, State to);
  void set_initial(State s) { initial_ = s; }
  void set_final(State s, bool final = true) { finals_.at(s) = final; }

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t num_states() const { return out_.size(); }
  State initial() const { return initial_; }
  bool is_final(State s) const { return finals_.at(s); }
  std::span<const Transition> transitions(State s) const { return out_.at(s); }
  std::size_t num_transitions() const;

  /// Sorted epsilon closure of a set of states.
  std::vector<State> epsilon_closure(std::vector<State> states) const;

private:
  std::size_t alphabet_size_;
  State initial_ = 0;
  std::vector<bool> finals_;
  std::vector<std::vector<Transition>> out_;
};

/// NfaLike adapter over an explicit automaton (closures precomputed).
std::shared_ptr<NfaLike> view(std::shared_ptr<const Nfa> nfa);
std::shared_ptr<NfaLike> view(Nfa nfa);

} // namespace wreath::automata

#endif
