#ifndef WREATH_TESTS_SUPPORT_HPP
#define WREATH_TESTS_SUPPORT_HPP

// Test-side oracles and random generators. Nothing here calls the library
// code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/automata/nfa.hpp"
#include "wreath/decision/decision.hpp"
#include "wreath/groups/finite_group.hpp"
#include "wreath/groups/wreath.hpp"

namespace wreath::test {

using automata::Nfa;
using automata::Symbol;
using automata::Word;

inline std::string fixture(const std::string& relative) {
  return std::string(WREATH_FIXTURES) + "/" + relative;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Every word over {0..k-1} of length exactly n.
inline std::vector<Word> words_of_length(std::size_t k, std::size_t n) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (Symbol a = 0; a < k; ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> words_up_to(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len)
    for (auto& w : words_of_length(k, len))
      out.push_back(std::move(w));
  return out;
}

/// Direct set simulation of an explicit NFA with epsilon moves.
inline bool simulate(const Nfa& x, const Word& w) {
  auto close = [&](std::set<automata::State> s) {
    std::vector<automata::State> stack(s.begin(), s.end());
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      for (const auto& t : x.transitions(q))
        if (t.symbol == automata::kEpsilon && s.insert(t.target).second)
          stack.push_back(t.target);
    }
    return s;
  };
  auto current = close({x.initial()});
  for (Symbol a : w) {
    std::set<automata::State> next;
    for (auto q : current)
      for (const auto& t : x.transitions(q))
        if (t.symbol == a)
          next.insert(t.target);
    current = close(std::move(next));
  }
  return std::any_of(current.begin(), current.end(), [&](auto q) { return x.is_final(q); });
}

inline Nfa random_nfa(std::mt19937& rng, std::size_t states, std::size_t letters,
                      double density = 0.3, bool epsilons = true) {
  Nfa x(letters);
  std::bernoulli_distribution coin(density);
  std::bernoulli_distribution final_coin(0.4);
  for (std::size_t i = 0; i < states; ++i)
    x.add_state(final_coin(rng));
  for (std::size_t p = 0; p < states; ++p)
    for (std::size_t q = 0; q < states; ++q) {
      for (Symbol a = 0; a < letters; ++a)
        if (coin(rng))
          x.add_transition(static_cast<automata::State>(p), a, static_cast<automata::State>(q));
      if (epsilons && p != q && std::bernoulli_distribution(0.1)(rng))
        x.add_transition(static_cast<automata::State>(p), automata::kEpsilon,
                         static_cast<automata::State>(q));
    }
  return x;
}

inline std::shared_ptr<const FiniteGroup> z2() {
  return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
}

inline Direction random_direction(std::mt19937& rng, int rank) {
  return Direction::from_index(
      std::uniform_int_distribution<std::size_t>(0, 2 * static_cast<std::size_t>(rank) - 1)(rng));
}

inline FreeWord random_free_word(std::mt19937& rng, int rank, std::size_t max_len) {
  std::vector<Direction> letters;
  const auto len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back(random_direction(rng, rank));
  return reduce(letters);
}

inline LampFreeElement random_lamp_free(std::mt19937& rng, const LampFreeGroup& g) {
  LampFreeElement x;
  const auto& h = *g.lamp_ops().group;
  std::uniform_int_distribution<FiniteGroup::Element> value(0, static_cast<FiniteGroup::Element>(h.order() - 1));
  for (int i = 0; i < 3; ++i) {
    const auto v = value(rng);
    if (!h.is_identity(v))
      x.lamps[random_free_word(rng, g.positions().rank, 3)] = v;
  }
  x.cursor = random_free_word(rng, g.positions().rank, 4);
  return x;
}

inline VectorLineElement random_vector_line(std::mt19937& rng, std::size_t dim,
                                            std::int64_t spread = 6) {
  VectorLineElement x;
  std::uniform_int_distribution<std::int64_t> pos(-spread, spread);
  std::uniform_int_distribution<std::int64_t> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> which(0, dim - 1);
  const int n = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> v(dim, 0);
    v[which(rng)] = coef(rng);
    if (std::all_of(v.begin(), v.end(), [](auto c) { return c == 0; }))
      continue;
    auto [it, fresh] = x.lamps.emplace(pos(rng), v);
    if (!fresh) {
      for (std::size_t j = 0; j < dim; ++j)
        it->second[j] += v[j];
      if (std::all_of(it->second.begin(), it->second.end(), [](auto c) { return c == 0; }))
        x.lamps.erase(it);
    }
  }
  x.cursor = pos(rng);
  return x;
}

inline IntLineElement random_int_line(std::mt19937& rng, std::int64_t spread = 8) {
  IntLineElement x;
  std::uniform_int_distribution<std::int64_t> pos(-spread, spread);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3);
  for (int i = 0; i < 4; ++i)
    if (auto c = coef(rng); c != 0)
      x.lamps[pos(rng)] = c;
  x.cursor = pos(rng);
  return x;
}

/// Random raw automaton for the decision tests.
inline decision::RawAutomaton random_raw_automaton(std::mt19937& rng,
                                                   std::shared_ptr<const FiniteGroup> h, int rank,
                                                   std::size_t max_states, std::size_t max_edges,
                                                   std::size_t max_label) {
  decision::RawAutomaton raw;
  raw.group = h;
  raw.rank = rank;
  const auto n = std::uniform_int_distribution<std::size_t>(1, max_states)(rng);
  for (std::size_t i = 0; i < n; ++i)
    raw.state_names.push_back("s" + std::to_string(i));
  raw.initial = 0;
  std::uniform_int_distribution<decision::StateId> state(0, static_cast<decision::StateId>(n - 1));
  const auto finals = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int i = 0; i < finals; ++i)
    raw.finals.push_back(state(rng));
  const auto edges = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
  std::uniform_int_distribution<std::size_t> label_len(0, max_label);
  std::bernoulli_distribution lamp(h->order() > 1 ? 0.35 : 0.0);
  std::uniform_int_distribution<FiniteGroup::Element> value(0, static_cast<FiniteGroup::Element>(h->order() - 1));
  for (std::size_t e = 0; e < edges; ++e) {
    decision::RawEdge edge{state(rng), {}, state(rng)};
    const auto len = label_len(rng);
    for (std::size_t j = 0; j < len; ++j) {
      if (lamp(rng))
        edge.label.push_back(LampToken{value(rng)});
      else
        edge.label.push_back(random_direction(rng, rank));
    }
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

} // namespace wreath::test

#endif
