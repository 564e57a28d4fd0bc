#include "wreath/automata/nfa.hpp"

#include <algorithm>

namespace wreath::automata {

State Nfa::add_state(bool final) {
  out_.emplace_back();
  finals_.push_back(final);
  return static_cast<State>(out_.size() - 1);
}

void Nfa::add_transition(State from, Symbol symbol, State to) {
  if (from >= out_.size() || to >= out_.size())
    throw std::out_of_range("transition endpoint is not a declared state");
  if (symbol != kEpsilon && symbol >= alphabet_size_)
    throw std::out_of_range("transition symbol outside the alphabet");
  out_[from].push_back({symbol, to});
}

std::size_t Nfa::num_transitions() const {
  std::size_t n = 0;
  for (const auto& ts : out_)
    n += ts.size();
  return n;
}

std::vector<State> Nfa::epsilon_closure(std::vector<State> states) const {
  std::vector<bool> seen(out_.size(), false);
  std::vector<State> stack;
  for (State s : states)
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  std::vector<State> closure;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    closure.push_back(s);
    for (const Transition& t : out_[s])
      if (t.symbol == kEpsilon && !seen[t.target]) {
        seen[t.target] = true;
        stack.push_back(t.target);
      }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

namespace {

class ExplicitView final : public NfaLike {
public:
  explicit ExplicitView(std::shared_ptr<const Nfa> nfa) : nfa_(std::move(nfa)) {
    closures_.resize(nfa_->num_states());
    bool any_epsilon = false;
    for (State s = 0; s < nfa_->num_states(); ++s)
      for (const Transition& t : nfa_->transitions(s))
        any_epsilon |= t.symbol == kEpsilon;
    for (State s = 0; s < nfa_->num_states(); ++s)
      closures_[s] = any_epsilon ? nfa_->epsilon_closure({s}) : std::vector<State>{s};
  }

  std::size_t alphabet_size() const override { return nfa_->alphabet_size(); }

  std::vector<State> initial_states() override {
    if (nfa_->num_states() == 0)
      return {};
    return closures_[nfa_->initial()];
  }

  void successors(State s, Symbol a, std::vector<State>& out) override {
    for (State c : closures_[s])
      for (const Transition& t : nfa_->transitions(c))
        if (t.symbol == a)
          out.insert(out.end(), closures_[t.target].begin(), closures_[t.target].end());
  }

  bool is_final(State s) override { return nfa_->is_final(s); }

private:
  std::shared_ptr<const Nfa> nfa_;
  std::vector<std::vector<State>> closures_;
};

} // namespace

std::shared_ptr<NfaLike> view(std::shared_ptr<const Nfa> nfa) {
  return std::make_shared<ExplicitView>(std::move(nfa));
}

std::shared_ptr<NfaLike> view(Nfa nfa) { return view(std::make_shared<const Nfa>(std::move(nfa))); }

} // namespace wreath::automata
