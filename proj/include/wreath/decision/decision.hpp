#ifndef WREATH_DECISION_DECISION_HPP
#define WREATH_DECISION_DECISION_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wreath/groups/tokens.hpp"
#include "wreath/kernels/kernels.hpp"
#include "wreath/loops/automaton.hpp"
#include "wreath/patterns/patterns.hpp"

namespace wreath::decision {

using loops::NormalizedAutomaton;
using loops::StateId;

struct RawEdge {
  StateId from = 0;
  TokenWord label;
  StateId to = 0;
};

/// Automaton whose edges carry arbitrary token words (possibly empty).
struct RawAutomaton {
  std::shared_ptr<const FiniteGroup> group;
  int rank = 1;
  std::vector<std::string> state_names;
  StateId initial = 0;
  std::vector<StateId> finals;
  std::vector<RawEdge> edges;
  std::optional<TokenWord> target;
};

/// Splits multi-token labels through fresh states and turns empty labels into
/// identity-lamp edges. Throws std::invalid_argument on malformed input.
NormalizedAutomaton normalize(const RawAutomaton& raw);

/// Identity is accepted by the result iff g is accepted by a: every final
/// state is linked to one fresh final state by a path reading g^-1.
NormalizedAutomaton reduce_target(const NormalizedAutomaton& a, const TokenWord& g);

enum class Answer { Yes, No, ResourceExhausted };
std::string to_string(Answer a);

struct DecideOptions {
  std::size_t cap = automata::kDefaultStateCap;
  kernels::Mode mode = kernels::Mode::Parallel;
};

struct Verdict {
  Answer answer = Answer::No;
  /// Word over the root's extended alphabet proving the answer yes.
  std::optional<automata::Word> certificate;
  std::string certificate_text;
  std::optional<StateId> final_state;
  std::size_t rounds = 0;
  std::size_t witnesses = 0;
  std::size_t explored = 0;
  std::vector<std::string> trace;
  std::string error;
};

/// Decides whether the identity of H wr F_r is accepted.
Verdict decide_identity(const NormalizedAutomaton& a, DecideOptions options = {});

/// Checks a certificate independently of how it was found: it must chain
/// from the initial state to `final_state`, its lamp letters must multiply to
/// the identity and its loop letters must form a word of the root language.
bool validate_certificate(const patterns::PatternFamily& family, const automata::Word& cert,
                          StateId final_state);

/// Classical saturation deciding identity membership when every lamp label
/// is the identity. Throws std::invalid_argument otherwise.
bool benois_oracle(const NormalizedAutomaton& a);

struct PathOracleResult {
  bool found = false;
  /// Edge indices of the shortest accepting path evaluating to the identity.
  std::vector<std::size_t> path;
  std::size_t explored = 0;
};

/// Breadth-first search over (state, group element) pairs reached by paths of
/// at most max_length edges.
PathOracleResult path_oracle(const NormalizedAutomaton& a, std::size_t max_length,
                             kernels::Mode mode = kernels::Mode::Parallel);

} // namespace wreath::decision

#endif
