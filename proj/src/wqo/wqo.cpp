#include "wreath/wqo/wqo.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "wreath/automata/operations.hpp"

namespace wreath::wqo {

using automata::Key;
using automata::State;
using automata::Symbol;

namespace {

class KernelSource final : public automata::DfaSource {
public:
  explicit KernelSource(std::shared_ptr<EvalClassSpace> space) : space_(std::move(space)) {}
  std::size_t alphabet_size() const override { return space_->num_letters(); }
  Key initial() override { return {kIdentityClass}; }
  Key next(const Key& from, Symbol a) override { return {space_->step(from[0], a)}; }
  bool accepting(const Key& k) override { return k[0] == kIdentityClass; }

private:
  std::shared_ptr<EvalClassSpace> space_;
};

} // namespace

std::shared_ptr<KernelAutomaton> kernel_automaton(std::shared_ptr<EvalClassSpace> space,
                                                  std::size_t cap) {
  return std::make_shared<KernelAutomaton>(std::make_shared<KernelSource>(std::move(space)), cap);
}

std::shared_ptr<KernelAutomaton> kernel_automaton(std::shared_ptr<const FiniteGroup> h,
                                                  std::size_t num_letters, std::size_t cap) {
  return kernel_automaton(std::make_shared<EvalClassSpace>(std::move(h), num_letters, cap), cap);
}

automata::Nfa upward_closure(std::span<const Symbol> w, std::shared_ptr<EvalClassSpace> space,
                             std::size_t cap) {
  const std::size_t n = space->num_letters();
  auto kernel = kernel_automaton(space, cap);
  const automata::Nfa u = automata::materialize(*kernel, cap);
  automata::Nfa result = u;
  for (Symbol x : w) {
    const Symbol letter[] = {x};
    result = automata::concat(result, automata::singleton(letter, n));
    result = automata::concat(result, u);
  }
  return result;
}

automata::Nfa upward_closure(std::span<const Symbol> w, std::shared_ptr<const FiniteGroup> h,
                             std::size_t num_letters, std::size_t cap) {
  return upward_closure(w, std::make_shared<EvalClassSpace>(std::move(h), num_letters, cap), cap);
}

// ---- UpwardClosureSet ---------------------------------------------------------

UpwardClosureSet::UpwardClosureSet(std::shared_ptr<EvalClassSpace> space, std::size_t cap)
    : space_(std::move(space)), cap_(cap) {}

void UpwardClosureSet::add(std::vector<Symbol> w) {
  for (Symbol x : w)
    if (x >= space_->num_letters())
      throw automata::AlphabetMismatch("letter " + std::to_string(x) + " outside the alphabet");
  words_.push_back(std::move(w));
}

bool UpwardClosureSet::contains(std::span<const Symbol> v) const {
  return std::any_of(words_.begin(), words_.end(),
                     [&](const auto& w) { return wqo_leq(w, v, *space_); });
}

State UpwardClosureSet::intern(Triple t) {
  std::lock_guard lock(mutex_);
  auto it = ids_.find(t);
  if (it != ids_.end())
    return it->second;
  if (triples_.size() >= cap_)
    throw automata::ResourceExhausted("upward-closure union exceeded its cap of " +
                                      std::to_string(cap_) + " states");
  const auto id = static_cast<State>(triples_.size());
  ids_.emplace(t, id);
  triples_.push_back(t);
  return id;
}

UpwardClosureSet::Triple UpwardClosureSet::triple(State s) const {
  std::lock_guard lock(mutex_);
  return triples_.at(s);
}

std::vector<State> UpwardClosureSet::initial_states() {
  std::vector<State> out;
  out.reserve(words_.size());
  for (std::uint32_t i = 0; i < words_.size(); ++i)
    out.push_back(intern({i, 0, kIdentityClass}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void UpwardClosureSet::successors(State s, Symbol a, std::vector<State>& out) {
  const Triple t = triple(s);
  out.push_back(intern({t.word, t.matched, space_->step(t.gap, a)}));
  const auto& w = words_[t.word];
  if (t.gap == kIdentityClass && t.matched < w.size() && w[t.matched] == a)
    out.push_back(intern({t.word, t.matched + 1, kIdentityClass}));
}

bool UpwardClosureSet::is_final(State s) {
  const Triple t = triple(s);
  return t.gap == kIdentityClass && t.matched == words_[t.word].size();
}

std::size_t UpwardClosureSet::explored() const {
  std::lock_guard lock(mutex_);
  return triples_.size();
}

// ---- wqo_leq ------------------------------------------------------------------

bool wqo_leq(std::span<const Symbol> u, std::span<const Symbol> v, EvalClassSpace& space) {
  std::set<std::pair<std::size_t, EvalClass>> current{{0, kIdentityClass}};
  std::set<std::pair<std::size_t, EvalClass>> next;
  for (Symbol x : v) {
    next.clear();
    for (const auto& [k, c] : current) {
      next.emplace(k, space.step(c, x));
      if (c == kIdentityClass && k < u.size() && u[k] == x)
        next.emplace(k + 1, kIdentityClass);
    }
    current.swap(next);
  }
  return current.contains({u.size(), kIdentityClass});
}

} // namespace wreath::wqo
