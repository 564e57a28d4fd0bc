#include "wreath/automata/lazy_dfa.hpp"

namespace wreath::automata {

LazyDfa::LazyDfa(std::shared_ptr<DfaSource> source, std::size_t cap)
    : source_(std::move(source)), alphabet_size_(source_->alphabet_size()), cap_(cap) {}

State LazyDfa::intern(Key key) {
  std::lock_guard lock(mutex_);
  auto it = ids_.find(key);
  if (it != ids_.end())
    return it->second;
  if (keys_.size() >= cap_)
    throw ResourceExhausted("lazy automaton exceeded its cap of " + std::to_string(cap_) +
                            " states");
  const State id = static_cast<State>(keys_.size());
  ids_.emplace(key, id);
  keys_.push_back(std::move(key));
  accepting_.push_back(-1);
  delta_.resize(delta_.size() + alphabet_size_, kUnknown);
  return id;
}

State LazyDfa::initial() {
  {
    std::lock_guard lock(mutex_);
    if (initial_ != kUnknown)
      return initial_;
  }
  State s = intern(source_->initial());
  std::lock_guard lock(mutex_);
  initial_ = s;
  return s;
}

State LazyDfa::next(State s, Symbol a) {
  Key from;
  {
    std::lock_guard lock(mutex_);
    State known = delta_[static_cast<std::size_t>(s) * alphabet_size_ + a];
    if (known != kUnknown)
      return known;
    from = keys_[s];
  }
  State t = intern(source_->next(from, a));
  std::lock_guard lock(mutex_);
  delta_[static_cast<std::size_t>(s) * alphabet_size_ + a] = t;
  return t;
}

bool LazyDfa::accepting(State s) {
  Key k;
  {
    std::lock_guard lock(mutex_);
    if (accepting_[s] >= 0)
      return accepting_[s] != 0;
    k = keys_[s];
  }
  const bool acc = source_->accepting(k);
  std::lock_guard lock(mutex_);
  accepting_[s] = acc ? 1 : 0;
  return acc;
}

Key LazyDfa::key(State s) const {
  std::lock_guard lock(mutex_);
  return keys_.at(s);
}

std::size_t LazyDfa::explored() const {
  std::lock_guard lock(mutex_);
  return keys_.size();
}

} // namespace wreath::automata
