#ifndef WREATH_WQO_EVAL_CLASS_HPP
#define WREATH_WQO_EVAL_CLASS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "wreath/automata/lazy_dfa.hpp"
#include "wreath/groups/finite_group.hpp"
#include "wreath/kernels/kernels.hpp"

namespace wreath::wqo {

/// Interned id of the function (assignment X -> H) -> H that a word induces.
/// Two words share an id iff every morphism X* -> H agrees on them.
using EvalClass = std::uint32_t;

/// The class of the empty word, i.e. of words in the kernel of every morphism.
inline constexpr EvalClass kIdentityClass = 0;

/// Evaluation tables larger than this are refused in the non-abelian case.
inline constexpr std::size_t kDefaultTableLimit = std::size_t{1} << 22;

/// Interning table for evaluation classes over a fixed alphabet of
/// `num_letters` letters. Abelian groups use per-letter counts modulo the
/// exponent; other groups store the full table over all |H|^|X| assignments,
/// where assignment i gives letter x the digit x of i written in base |H|.
class EvalClassSpace {
public:
  EvalClassSpace(std::shared_ptr<const FiniteGroup> h, std::size_t num_letters,
                 std::size_t class_cap = automata::kDefaultStateCap,
                 kernels::Mode mode = kernels::Mode::Parallel,
                 std::size_t table_limit = kDefaultTableLimit);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  std::size_t num_letters() const { return num_letters_; }
  bool uses_counts() const { return abelian_; }

  /// Class of u x given the class of u.
  EvalClass step(EvalClass c, automata::Symbol x);
  EvalClass class_of(std::span<const automata::Symbol> word);
  bool is_identity(EvalClass c) const { return c == kIdentityClass; }

  /// Number of classes interned so far.
  std::size_t size() const;

private:
  EvalClass intern(automata::Key key);
  automata::Key successor_key(const automata::Key& key, automata::Symbol x) const;

  std::shared_ptr<const FiniteGroup> group_;
  std::size_t num_letters_;
  std::size_t cap_;
  kernels::Mode mode_;
  bool abelian_;
  std::size_t modulus_ = 1;
  std::vector<std::size_t> strides_;

  mutable std::mutex mutex_;
  std::unordered_map<automata::Key, EvalClass, automata::KeyHash> ids_;
  std::vector<automata::Key> keys_;
  std::vector<EvalClass> delta_;
};

} // namespace wreath::wqo

#endif
