#ifndef WREATH_PATTERNS_PATTERNS_HPP
#define WREATH_PATTERNS_PATTERNS_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreath/automata/operations.hpp"
#include "wreath/kernels/kernels.hpp"
#include "wreath/loops/loops.hpp"
#include "wreath/wqo/wqo.hpp"

namespace wreath::patterns {

using automata::Symbol;
using automata::Word;
using loops::Edge;
using loops::LoopLetter;
using loops::NormalizedAutomaton;
using loops::StateId;

/// Loop alphabets X_t together with the lamp edges of the automaton. The
/// extended alphabet Y_t lists the letters of X_t first and then every lamp
/// edge, so a Y_t letter below x_size(t) is a loop letter.
struct PatternAlphabets {
  int rank = 1;
  loops::LoopAlphabets loops;
  std::vector<Edge> lamp_edges;

  std::size_t x_size(NodeType t) const { return loops[t.index()].size(); }
  std::size_t y_size(NodeType t) const { return x_size(t) + lamp_edges.size(); }
  bool is_loop_letter(NodeType t, Symbol y) const { return y < x_size(t); }
  std::optional<Symbol> index_of(NodeType t, const LoopLetter& x) const;
  /// Source and target state of a Y_t letter.
  std::pair<StateId, StateId> endpoints(NodeType t, Symbol y) const;
  /// Erases lamp letters.
  automata::LetterMorphism projection(NodeType t) const;
  /// Loop letters evaluate to the identity, lamp letters to their lamp.
  std::vector<FiniteGroup::Element> lamp_values(NodeType t, const FiniteGroup& h) const;
};

PatternAlphabets build_alphabets(const NormalizedAutomaton& a, const loops::LoopAlphabets& x);
PatternAlphabets build_alphabets(const NormalizedAutomaton& a);

/// `(p,x1,q)` for loop letters and `(p,g:h,q)` for lamp letters.
std::string format_letter(const NormalizedAutomaton& a, const PatternAlphabets& y, NodeType t,
                          Symbol letter);
std::string format_word(const NormalizedAutomaton& a, const PatternAlphabets& y, NodeType t,
                        std::span<const Symbol> word);

/// State-chained sequences of Y_t letters leading from p to q; one automaton
/// state per automaton state of A.
automata::Nfa path_language(const PatternAlphabets& y, NodeType t, StateId p, StateId q,
                            std::size_t num_states);

/// Substitution X_t -> P(Y_d*): d-letters expand to the union of path
/// languages between the endpoints of matching d and d^-1 edges, every other
/// letter expands to the empty word.
automata::RegularSubstitution build_sigma(const NormalizedAutomaton& a, const PatternAlphabets& y,
                                          NodeType t, Direction d);

struct SaturationOptions {
  std::size_t cap = automata::kDefaultStateCap;
  kernels::Mode mode = kernels::Mode::Parallel;
};

struct SaturationStep {
  std::size_t round = 0;
  NodeType type = NodeType::root();
  Word witness;
};

/// The growing under-approximation of the pattern language of each node
/// type: the upward closures of the witnesses found so far (always including
/// the empty word) together with the latest candidate language of that type.
class PatternFamily {
public:
  PatternFamily(NormalizedAutomaton a, PatternAlphabets y, SaturationOptions options = {});

  const NormalizedAutomaton& automaton() const { return a_; }
  const PatternAlphabets& alphabets() const { return y_; }
  const SaturationOptions& options() const { return options_; }

  /// Upward closures of the witnesses of t.
  const wqo::UpwardClosureSet& closures(NodeType t) const { return *sets_[t.index()]; }
  /// Latest candidate language absorbed into t, if any.
  std::shared_ptr<automata::LazyDfa> snapshot(NodeType t) const { return snapshots_[t.index()]; }
  std::shared_ptr<wqo::EvalClassSpace> classes(NodeType t) { return spaces_[t.index()]; }
  bool contains(NodeType t, std::span<const Symbol> w) const;
  /// Changes exactly when the language of t grows.
  std::size_t version(NodeType t) const { return versions_[t.index()]; }

  /// Fresh deterministic view of the current language of t.
  std::shared_ptr<automata::LazyDfa> dfa(NodeType t);
  /// Words over Y_t whose loop letters form a word of the language of t and
  /// whose lamp letters multiply to the identity.
  std::shared_ptr<automata::LazyDfa> restricted(NodeType t);
  /// Intersection over the child types d of t of the sigma-preimages of
  /// restricted(d).
  std::shared_ptr<automata::LazyDfa> candidate(NodeType t);

  const std::vector<SaturationStep>& log() const { return log_; }
  std::vector<std::string> trace_lines() const;
  std::size_t rounds() const { return rounds_; }
  std::size_t witnesses() const { return log_.size(); }
  /// States interned by every lazy automaton built so far.
  std::size_t explored();
  /// False when saturation stopped on a resource cap.
  bool complete() const { return complete_; }
  const std::string& error() const { return error_; }

  /// Registers an automaton built outside the family so its states count
  /// towards explored().
  void track(const std::shared_ptr<automata::LazyDfa>& dfa);

private:
  friend PatternFamily saturate(const NormalizedAutomaton&, SaturationOptions);

  template <class T>
  struct Cached {
    std::vector<std::size_t> versions;
    std::shared_ptr<T> value;
  };

  void sweep();
  std::vector<std::size_t> versions_of(NodeType t) const;
  void grow(NodeType t, Word witness, std::shared_ptr<automata::LazyDfa> candidate);

  NormalizedAutomaton a_;
  PatternAlphabets y_;
  SaturationOptions options_;
  std::vector<std::shared_ptr<wqo::EvalClassSpace>> spaces_;
  std::vector<std::shared_ptr<wqo::UpwardClosureSet>> sets_;
  std::vector<std::shared_ptr<automata::LazyDfa>> snapshots_;
  std::vector<std::size_t> versions_;
  std::vector<Cached<automata::LazyDfa>> restricted_;
  std::vector<Cached<automata::LazyDfa>> candidates_;
  std::map<std::pair<std::size_t, std::size_t>, automata::RegularSubstitution> sigmas_;
  std::map<std::pair<std::size_t, std::size_t>, Cached<automata::LazyDfa>> preimages_;

  std::vector<std::shared_ptr<automata::LazyDfa>> live_;
  std::size_t retired_ = 0;

  std::vector<SaturationStep> log_;
  std::size_t rounds_ = 0;
  bool complete_ = false;
  std::string error_;
};

/// Grows every language from the closure of the empty word: for each type in
/// a fixed round-robin order (root last), while the candidate language has a
/// word outside the current language, the shortest such word is logged, its
/// upward closure is added and the candidate itself is absorbed. Full passes
/// repeat until one adds nothing. A resource cap stops the loop and leaves a
/// partial family with complete() == false.
PatternFamily saturate(const NormalizedAutomaton& a, SaturationOptions options = {});

/// Bounded semi-decision for loop patterns: enumerates the explicit loops of
/// each letter of w up to the given depth and length and looks for an
/// assignment whose combined effect is the identity.
bool brute_force_pattern_oracle(const NormalizedAutomaton& a, const PatternAlphabets& y,
                                NodeType t, std::span<const Symbol> w, std::size_t max_depth,
                                std::size_t max_length);

} // namespace wreath::patterns

#endif
