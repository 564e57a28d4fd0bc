#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wreath/automata/lazy_dfa.hpp"
#include "wreath/automata/operations.hpp"

using namespace wreath;
using namespace wreath::automata;
using namespace wreath::test;

namespace {

/// Words over {x} of length = offset mod 2.
Nfa parity(std::size_t alphabet, Symbol x, int offset) {
  Nfa n(alphabet);
  const State even = n.add_state(offset == 0);
  const State odd = n.add_state(offset == 1);
  n.add_transition(even, x, odd);
  n.add_transition(odd, x, even);
  for (Symbol a = 0; a < alphabet; ++a)
    if (a != x) {
      n.add_transition(even, a, even);
      n.add_transition(odd, a, odd);
    }
  return n;
}

/// (w)* for a single word w.
Nfa star_of(const Word& w, std::size_t alphabet) {
  Nfa n(alphabet);
  const State start = n.add_state(true);
  State at = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const State next = i + 1 == w.size() ? start : n.add_state(false);
    n.add_transition(at, w[i], next);
    at = next;
  }
  return n;
}

std::size_t count(const Word& w, Symbol a) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), a)); }

/// All concatenations of one word from each image language, each image
/// enumerated up to max_len letters.
bool some_expansion_in(const std::vector<Nfa>& images, std::size_t b, const Word& w,
                       const Nfa& r, std::size_t max_len) {
  std::vector<Word> current{{}};
  for (Symbol a : w) {
    std::vector<Word> next;
    for (const Word& u : words_up_to(b, max_len))
      if (simulate(images[a], u))
        for (const Word& prefix : current) {
          Word v = prefix;
          v.insert(v.end(), u.begin(), u.end());
          next.push_back(std::move(v));
        }
    current = std::move(next);
  }
  return std::any_of(current.begin(), current.end(), [&](const Word& v) { return simulate(r, v); });
}

} // namespace

TEST_CASE("products") {
  const Nfa all = universal_language(1);
  const Nfa even = star_of({0, 0}, 1);
  const auto l = intersect(determinize(even), determinize(all));
  for (const auto& w : words_up_to(1, 8))
    CHECK(membership(*l, w) == (w.size() % 2 == 0));

  Nfa odd(1);
  const State s0 = odd.add_state(false);
  const State s1 = odd.add_state(true);
  odd.add_transition(s0, 0, s1);
  odd.add_transition(s1, 0, s0);
  CHECK_FALSE(emptiness_witness(*intersect(determinize(even), determinize(odd))).has_value());
  CHECK_FALSE(emptiness_witness(intersect(even, odd)).has_value());

  const auto both = intersect(determinize(parity(2, 0, 0)), determinize(parity(2, 1, 0)));
  for (std::size_t len = 0; len <= 8; ++len)
    for (const auto& w : words_of_length(2, len))
      CHECK(membership(*both, w) == (count(w, 0) % 2 == 0 && count(w, 1) % 2 == 0));

  CHECK_THROWS_AS(intersect(determinize(parity(2, 0, 0)), determinize(parity(3, 0, 0))),
                  AlphabetMismatch);
}

TEST_CASE("complement") {
  for (const auto& w : words_up_to(2, 6)) {
    CHECK(membership(*complement(empty_language(2)), w));
    CHECK_FALSE(membership(*complement(universal_language(2)), w));
  }
  const auto odd = complement(star_of({0, 0}, 1));
  for (const auto& w : words_up_to(1, 10))
    CHECK(membership(*odd, w) == (w.size() % 2 == 1));
}

TEST_CASE("complement respects the state cap") {
  const auto dfa = complement(parity(2, 0, 0), 1);
  CHECK_THROWS_AS(emptiness_witness(*dfa), ResourceExhausted);
}

TEST_CASE("emptiness witness") {
  CHECK(emptiness_witness(epsilon_language(2)) == Word{});
  CHECK_FALSE(emptiness_witness(empty_language(2)).has_value());
  Nfa odd(1);
  const State s0 = odd.add_state(false);
  const State s1 = odd.add_state(true);
  odd.add_transition(s0, 0, s1);
  odd.add_transition(s1, 0, s0);
  CHECK(emptiness_witness(odd) == Word{0});
  // Ties go to the smaller letter.
  Nfa two(2);
  const State t0 = two.add_state(false);
  const State t1 = two.add_state(true);
  two.add_transition(t0, 1, t1);
  two.add_transition(t0, 0, t1);
  CHECK(emptiness_witness(two) == Word{0});
}

TEST_CASE("inverse morphisms") {
  const Nfa eps = epsilon_language(2);
  const Nfa pre = inverse_morphism(eps, LetterMorphism{{}, {}, {}});
  for (const auto& w : words_up_to(3, 4))
    CHECK(simulate(pre, w));

  // Projection erasing letters 2 and 3 of {0,1,2,3}.
  const Nfa kill = inverse_morphism(epsilon_language(2), LetterMorphism{{0}, {1}, {}, {}});
  for (const auto& w : words_up_to(4, 4))
    CHECK(simulate(kill, w) == (count(w, 0) == 0 && count(w, 1) == 0));

  // u -> xy over (xy)* gives u*.
  const Nfa u_star = inverse_morphism(star_of({0, 1}, 2), LetterMorphism{{0, 1}, {1}});
  for (const auto& w : words_up_to(2, 6))
    CHECK(simulate(u_star, w) == (count(w, 1) == 0));

  const auto lazy = inverse_morphism(determinize(star_of({0, 1}, 2)), LetterMorphism{{0, 1}, {1}});
  for (const auto& w : words_up_to(2, 6))
    CHECK(membership(*lazy, w) == (count(w, 1) == 0));
}

TEST_CASE("kernel preimages") {
  const auto z2 = FiniteGroup::cyclic(2);
  const std::vector<FiniteGroup::Element> nu{1, 0, 0};
  const Nfa even_t = kernel_preimage(z2, nu, 0);
  CHECK(even_t.num_states() == 2);
  for (const auto& w : words_up_to(3, 5))
    CHECK(simulate(even_t, w) == (count(w, 0) % 2 == 0));

  const std::vector<FiniteGroup::Element> trivial{0, 0};
  for (const auto& w : words_up_to(2, 4))
    CHECK(simulate(kernel_preimage(z2, trivial, 0), w));

  const auto z3 = FiniteGroup::cyclic(3);
  const std::vector<FiniteGroup::Element> g{1};
  const Nfa cubes = kernel_preimage(z3, g, 0);
  for (const auto& w : words_up_to(1, 9))
    CHECK(simulate(cubes, w) == (w.size() % 3 == 0));
}

TEST_CASE("inverse substitutions") {
  auto shared = [](Nfa n) { return std::make_shared<const Nfa>(std::move(n)); };
  RegularSubstitution eps{2, {shared(epsilon_language(2)), shared(epsilon_language(2))}};
  const Nfa all = inverse_substitution(eps, epsilon_language(2));
  for (const auto& w : words_up_to(2, 4))
    CHECK(simulate(all, w));

  RegularSubstitution with_empty{2, {shared(epsilon_language(2)), shared(empty_language(2))}};
  const Nfa no_b = inverse_substitution(with_empty, universal_language(2));
  for (const auto& w : words_up_to(2, 4))
    CHECK(simulate(no_b, w) == (count(w, 1) == 0));

  // sigma(u) = x*, sigma(v) = y, R = (xy)*.
  Nfa x_star(2);
  x_star.add_transition(x_star.add_state(true), 0, 0);
  const Word y{1};
  const std::vector<Nfa> images{x_star, singleton(y, 2)};
  RegularSubstitution sigma{2, {shared(images[0]), shared(images[1])}};
  const Nfa r = star_of({0, 1}, 2);
  const Nfa pre = inverse_substitution(sigma, r);
  const auto lazy = inverse_substitution(sigma, view(r));
  for (const auto& w : words_up_to(2, 5)) {
    const bool expected = some_expansion_in(images, 2, w, r, 2);
    CHECK(simulate(pre, w) == expected);
    CHECK(membership(*lazy, w) == expected);
  }
}

TEST_CASE("inverse substitutions contain every bounded expansion on random inputs") {
  std::mt19937 rng(11);
  auto shared = [](Nfa n) { return std::make_shared<const Nfa>(std::move(n)); };
  for (int round = 0; round < 30; ++round) {
    std::vector<Nfa> images{random_nfa(rng, 2, 2, 0.4), random_nfa(rng, 2, 2, 0.4)};
    RegularSubstitution sigma{2, {shared(images[0]), shared(images[1])}};
    const Nfa r = random_nfa(rng, 3, 2, 0.35);
    const Nfa pre = inverse_substitution(sigma, r);
    for (const auto& w : words_up_to(2, 3))
      if (some_expansion_in(images, 2, w, r, 2))
        CHECK(simulate(pre, w));
  }
}

TEST_CASE("union, concatenation, singleton and membership") {
  const Nfa even = star_of({0, 0}, 1);
  for (const auto& w : words_up_to(1, 6)) {
    CHECK(simulate(union_of(empty_language(1), even), w) == simulate(even, w));
    CHECK(simulate(concat(epsilon_language(1), even), w) == simulate(even, w));
  }
  CHECK(membership(even, Word{0, 0, 0, 0}));
  CHECK_FALSE(membership(even, Word{0, 0, 0}));
  const Word xyx{0, 1, 0};
  for (const auto& w : words_up_to(2, 4))
    CHECK(simulate(singleton(xyx, 2), w) == (w == xyx));
}

TEST_CASE("operations agree with direct simulation on random automata") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const Nfa x = random_nfa(rng, std::uniform_int_distribution<std::size_t>(1, 5)(rng), k);
    const Nfa y = random_nfa(rng, std::uniform_int_distribution<std::size_t>(1, 5)(rng), k);
    const auto dx = determinize(x);
    const auto dy = determinize(y);
    const auto both = intersect(dx, dy);
    const auto either = unite({dx, dy});
    const auto not_x = complement(x);
    const auto not_not_x = complement(complement(x));
    const Nfa u = union_of(x, y);
    const Nfa c = concat(x, y);
    const Nfa i = intersect(x, y);
    const Nfa m = materialize(*dx);
    const std::size_t max_len = k <= 2 ? 6 : 4;
    bool any = false;
    for (const auto& w : words_up_to(k, max_len)) {
      const bool in_x = simulate(x, w);
      const bool in_y = simulate(y, w);
      any = any || (in_x && in_y);
      CHECK(membership(*dx, w) == in_x);
      CHECK(membership(*both, w) == (in_x && in_y));
      CHECK(membership(*either, w) == (in_x || in_y));
      CHECK(membership(*not_x, w) == !in_x);
      CHECK(membership(*not_not_x, w) == in_x);
      CHECK(simulate(u, w) == (in_x || in_y));
      CHECK(simulate(i, w) == (in_x && in_y));
      CHECK(simulate(m, w) == in_x);
      bool split = false;
      for (std::size_t cut = 0; cut <= w.size() && !split; ++cut)
        split = simulate(x, Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut))) &&
                simulate(y, Word(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end()));
      CHECK(simulate(c, w) == split);
    }
    const auto witness = emptiness_witness(*both);
    if (any)
      REQUIRE(witness.has_value());
    if (witness) {
      CHECK(simulate(x, *witness));
      CHECK(simulate(y, *witness));
      // Nothing shorter is accepted.
      if (!witness->empty())
        for (const auto& w : words_up_to(k, witness->size() - 1))
          CHECK_FALSE((simulate(x, w) && simulate(y, w)));
    }
  }
}

TEST_CASE("lazy automata can be explored concurrently") {
  std::mt19937 rng(9);
  const Nfa x = random_nfa(rng, 5, 3, 0.4);
  const auto dx = determinize(x);
  const auto words = words_up_to(3, 6);
  std::vector<char> got(words.size());
#pragma omp parallel for
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(words.size()); ++i)
    got[static_cast<std::size_t>(i)] = membership(*dx, words[static_cast<std::size_t>(i)]);
  for (std::size_t i = 0; i < words.size(); ++i)
    CHECK(static_cast<bool>(got[i]) == simulate(x, words[i]));
}
