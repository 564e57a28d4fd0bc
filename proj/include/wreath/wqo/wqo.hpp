#ifndef WREATH_WQO_WQO_HPP
#define WREATH_WQO_WQO_HPP

#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "wreath/automata/lazy_dfa.hpp"
#include "wreath/automata/nfa.hpp"
#include "wreath/wqo/eval_class.hpp"

namespace wreath::wqo {

/// Lazy DFA for the words that every morphism X* -> H sends to the identity.
/// Its states are evaluation classes; only the identity class accepts.
using KernelAutomaton = automata::LazyDfa;

std::shared_ptr<KernelAutomaton> kernel_automaton(std::shared_ptr<EvalClassSpace> space,
                                                  std::size_t cap = automata::kDefaultStateCap);
std::shared_ptr<KernelAutomaton> kernel_automaton(std::shared_ptr<const FiniteGroup> h,
                                                  std::size_t num_letters,
                                                  std::size_t cap = automata::kDefaultStateCap);

/// Upward closure of w as the explicit concatenation U w_1 U ... w_n U, where
/// U is the materialized kernel automaton.
automata::Nfa upward_closure(std::span<const automata::Symbol> w,
                             std::shared_ptr<EvalClassSpace> space,
                             std::size_t cap = automata::kDefaultStateCap);
automata::Nfa upward_closure(std::span<const automata::Symbol> w,
                             std::shared_ptr<const FiniteGroup> h, std::size_t num_letters,
                             std::size_t cap = automata::kDefaultStateCap);

/// A growing finite union of upward closures, read as an NFA without building
/// any concatenation. A state is (word i, matched prefix j, class of the
/// current gap); a letter either extends the gap or, when the gap is in the
/// kernel, matches the next letter of word i and opens a new gap.
class UpwardClosureSet final : public automata::NfaLike {
public:
  explicit UpwardClosureSet(std::shared_ptr<EvalClassSpace> space,
                            std::size_t cap = automata::kDefaultStateCap);

  /// Adds the closure of w. Not safe to call concurrently with queries.
  void add(std::vector<automata::Symbol> w);
  const std::vector<std::vector<automata::Symbol>>& generators() const { return words_; }
  /// True iff some generator is below v.
  bool contains(std::span<const automata::Symbol> v) const;

  std::size_t alphabet_size() const override { return space_->num_letters(); }
  std::vector<automata::State> initial_states() override;
  void successors(automata::State s, automata::Symbol a,
                  std::vector<automata::State>& out) override;
  bool is_final(automata::State s) override;

  std::size_t explored() const;

private:
  struct Triple {
    std::uint32_t word;
    std::uint32_t matched;
    EvalClass gap;
    bool operator==(const Triple&) const = default;
  };
  struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept {
      return (static_cast<std::size_t>(t.word) * 0x9e3779b97f4a7c15ull) ^
             (static_cast<std::size_t>(t.matched) << 32) ^ t.gap;
    }
  };
  automata::State intern(Triple t);
  Triple triple(automata::State s) const;

  std::shared_ptr<EvalClassSpace> space_;
  std::size_t cap_;
  std::vector<std::vector<automata::Symbol>> words_;
  mutable std::mutex mutex_;
  std::unordered_map<Triple, automata::State, TripleHash> ids_;
  std::vector<Triple> triples_;
};

/// u is below v: v = v_0 u_1 v_1 ... u_n v_n with every gap v_i in the kernel
/// of every morphism. Dynamic programming over v with state (matched prefix
/// of u, class of the current gap).
bool wqo_leq(std::span<const automata::Symbol> u, std::span<const automata::Symbol> v,
             EvalClassSpace& space);

} // namespace wreath::wqo

#endif
