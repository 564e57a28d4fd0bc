#include "wreath/wqo/eval_class.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace wreath::wqo {

namespace {
constexpr EvalClass kUnknown = std::numeric_limits<EvalClass>::max();
}

EvalClassSpace::EvalClassSpace(std::shared_ptr<const FiniteGroup> h, std::size_t num_letters,
                               std::size_t class_cap, kernels::Mode mode,
                               std::size_t table_limit)
    : group_(std::move(h)), num_letters_(num_letters), cap_(class_cap), mode_(mode),
      abelian_(group_->is_abelian()) {
  automata::Key identity;
  if (abelian_) {
    modulus_ = group_->exponent();
    identity.assign(num_letters_, 0);
  } else {
    std::size_t size = 1;
    strides_.reserve(num_letters_);
    for (std::size_t x = 0; x < num_letters_; ++x) {
      strides_.push_back(size);
      if (size > table_limit / group_->order())
        throw automata::ResourceExhausted("evaluation table over " + std::to_string(num_letters_) +
                                          " letters in a group of order " +
                                          std::to_string(group_->order()) +
                                          " exceeds the table limit");
      size *= group_->order();
    }
    identity.assign(size, group_->identity());
  }
  intern(std::move(identity));
}

automata::Key EvalClassSpace::successor_key(const automata::Key& key, automata::Symbol x) const {
  automata::Key out(key.size());
  if (abelian_) {
    out = key;
    out[x] = static_cast<std::uint32_t>((out[x] + 1) % modulus_);
    return out;
  }
  kernels::eval_table_step(mode_, *group_, key, out, strides_[x]);
  return out;
}

EvalClass EvalClassSpace::intern(automata::Key key) {
  std::lock_guard lock(mutex_);
  auto it = ids_.find(key);
  if (it != ids_.end())
    return it->second;
  if (keys_.size() >= cap_)
    throw automata::ResourceExhausted("evaluation classes exceeded the cap of " +
                                      std::to_string(cap_));
  const auto id = static_cast<EvalClass>(keys_.size());
  ids_.emplace(key, id);
  keys_.push_back(std::move(key));
  delta_.resize(delta_.size() + num_letters_, kUnknown);
  return id;
}

EvalClass EvalClassSpace::step(EvalClass c, automata::Symbol x) {
  if (x >= num_letters_)
    throw std::out_of_range("letter " + std::to_string(x) + " outside the alphabet");
  automata::Key from;
  {
    std::lock_guard lock(mutex_);
    const EvalClass known = delta_[static_cast<std::size_t>(c) * num_letters_ + x];
    if (known != kUnknown)
      return known;
    from = keys_.at(c);
  }
  const EvalClass to = intern(successor_key(from, x));
  std::lock_guard lock(mutex_);
  delta_[static_cast<std::size_t>(c) * num_letters_ + x] = to;
  return to;
}

EvalClass EvalClassSpace::class_of(std::span<const automata::Symbol> word) {
  EvalClass c = kIdentityClass;
  for (auto x : word)
    c = step(c, x);
  return c;
}

std::size_t EvalClassSpace::size() const {
  std::lock_guard lock(mutex_);
  return keys_.size();
}

} // namespace wreath::wqo
