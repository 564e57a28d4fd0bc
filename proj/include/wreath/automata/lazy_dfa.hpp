#ifndef WREATH_AUTOMATA_LAZY_DFA_HPP
#define WREATH_AUTOMATA_LAZY_DFA_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "wreath/automata/nfa.hpp"

namespace wreath::automata {

/// Canonical description of a lazily discovered DFA state.
using Key = std::vector<std::uint32_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ k.size();
    for (auto v : k) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Defines a deterministic automaton implicitly, on canonical keys.
class DfaSource {
public:
  virtual ~DfaSource() = default;
  virtual std::size_t alphabet_size() const = 0;
  virtual Key initial() = 0;
  virtual Key next(const Key& from, Symbol a) = 0;
  virtual bool accepting(const Key& k) = 0;
};

/// Deterministic automaton whose states are interned and whose transitions
/// are memoized on first use. The cache is internally synchronized.
class LazyDfa final : public NfaLike {
public:
  explicit LazyDfa(std::shared_ptr<DfaSource> source, std::size_t cap = kDefaultStateCap);

  State initial();
  State next(State s, Symbol a);
  bool accepting(State s);
  Key key(State s) const;

  /// Number of states interned so far.
  std::size_t explored() const;
  std::size_t cap() const { return cap_; }

  std::size_t alphabet_size() const override { return alphabet_size_; }
  std::vector<State> initial_states() override { return {initial()}; }
  void successors(State s, Symbol a, std::vector<State>& out) override { out.push_back(next(s, a)); }
  bool is_final(State s) override { return accepting(s); }

private:
  static constexpr State kUnknown = std::numeric_limits<State>::max();

  State intern(Key key);

  std::shared_ptr<DfaSource> source_;
  std::size_t alphabet_size_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  std::unordered_map<Key, State, KeyHash> ids_;
  std::vector<Key> keys_;
  std::vector<signed char> accepting_;
  std::vector<State> delta_;
  State initial_ = kUnknown;
};

} // namespace wreath::automata

#endif
