#ifndef WREATH_AUTOMATA_OPERATIONS_HPP
#define WREATH_AUTOMATA_OPERATIONS_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "wreath/automata/lazy_dfa.hpp"
#include "wreath/automata/nfa.hpp"
#include "wreath/groups/finite_group.hpp"

namespace wreath::automata {

// ---- basic languages ---------------------------------------------------------

Nfa empty_language(std::size_t alphabet_size);
Nfa epsilon_language(std::size_t alphabet_size);
Nfa universal_language(std::size_t alphabet_size);
Nfa singleton(std::span<const Symbol> word, std::size_t alphabet_size);

Nfa union_of(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
/// Explicit product restricted to reachable pairs.
Nfa intersect(const Nfa& a, const Nfa& b);

bool membership(NfaLike& x, std::span<const Symbol> word);
bool membership(const Nfa& x, std::span<const Symbol> word);

// ---- lazy constructions ------------------------------------------------------

/// On-the-fly subset construction.
std::shared_ptr<LazyDfa> determinize(std::shared_ptr<NfaLike> nfa,
                                     std::size_t cap = kDefaultStateCap);
std::shared_ptr<LazyDfa> determinize(const Nfa& nfa, std::size_t cap = kDefaultStateCap);

std::shared_ptr<LazyDfa> intersect(std::vector<std::shared_ptr<LazyDfa>> parts,
                                   std::size_t cap = kDefaultStateCap);
std::shared_ptr<LazyDfa> intersect(std::shared_ptr<LazyDfa> a, std::shared_ptr<LazyDfa> b,
                                   std::size_t cap = kDefaultStateCap);

/// Product automaton accepting when any component accepts.
std::shared_ptr<LazyDfa> unite(std::vector<std::shared_ptr<LazyDfa>> parts,
                               std::size_t cap = kDefaultStateCap);

/// Same states, acceptance flipped.
std::shared_ptr<LazyDfa> complement(std::shared_ptr<LazyDfa> dfa,
                                    std::size_t cap = kDefaultStateCap);
std::shared_ptr<LazyDfa> complement(const Nfa& nfa, std::size_t cap = kDefaultStateCap);

/// Shortest accepted word; among equally short ones the least in letter-index
/// order. Throws ResourceExhausted when the automaton's cap is hit.
std::optional<Word> emptiness_witness(LazyDfa& dfa);
std::optional<Word> emptiness_witness(const Nfa& nfa, std::size_t cap = kDefaultStateCap);

/// Reachable part of an NfaLike as an explicit automaton.
Nfa materialize(NfaLike& x, std::size_t cap = kDefaultStateCap);

// ---- morphisms and substitutions ---------------------------------------------

/// Letter map A -> B*: phi[a] is the image of letter a, so |A| = phi.size().
using LetterMorphism = std::vector<Word>;

/// {w in A* : phi(w) in L(x)}, on x's states.
Nfa inverse_morphism(const Nfa& x, const LetterMorphism& phi);
std::shared_ptr<LazyDfa> inverse_morphism(std::shared_ptr<LazyDfa> x, LetterMorphism phi,
                                          std::size_t cap = kDefaultStateCap);

/// Words whose image under nu (evaluated in H) equals target. One state per
/// group element.
Nfa kernel_preimage(const FiniteGroup& h, std::span<const FiniteGroup::Element> nu,
                    FiniteGroup::Element target);

/// A regular substitution A -> P(B*); images[a] is an automaton over B.
struct RegularSubstitution {
  std::size_t target_alphabet_size = 0;
  std::vector<std::shared_ptr<const Nfa>> images;
};

/// {w in A* : sigma(w) meets L(r)}, on r's states. Transitions are computed on
/// demand and memoized.
std::shared_ptr<NfaLike> inverse_substitution(RegularSubstitution sigma,
                                              std::shared_ptr<NfaLike> r);
Nfa inverse_substitution(const RegularSubstitution& sigma, const Nfa& r);

} // namespace wreath::automata

#endif
