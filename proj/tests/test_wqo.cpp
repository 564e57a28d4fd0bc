#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "support.hpp"
#include "wreath/automata/operations.hpp"
#include "wreath/kernels/kernels.hpp"
#include "wreath/wqo/wqo.hpp"

using namespace wreath;
using namespace wreath::wqo;
using namespace wreath::test;

namespace {

using Assignment = std::vector<FiniteGroup::Element>;

std::vector<Assignment> all_assignments(const FiniteGroup& h, std::size_t letters) {
  std::vector<Assignment> out{{}};
  for (std::size_t i = 0; i < letters; ++i) {
    std::vector<Assignment> next;
    for (const auto& a : out)
      for (FiniteGroup::Element g = 0; g < h.order(); ++g) {
        auto b = a;
        b.push_back(g);
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

/// Value of the word under every assignment, by direct multiplication.
std::vector<FiniteGroup::Element> table_of(const FiniteGroup& h, const Word& w,
                                           const std::vector<Assignment>& assignments) {
  std::vector<FiniteGroup::Element> out;
  for (const auto& a : assignments) {
    FiniteGroup::Element x = h.identity();
    for (Symbol s : w)
      x = h.mul(x, a[s]);
    out.push_back(x);
  }
  return out;
}

bool in_kernel(const FiniteGroup& h, const Word& w, const std::vector<Assignment>& assignments) {
  const auto t = table_of(h, w, assignments);
  return std::all_of(t.begin(), t.end(), [&](auto x) { return h.is_identity(x); });
}

/// u below v by trying every embedding of u into v.
bool leq_by_embeddings(const FiniteGroup& h, const Word& u, const Word& v,
                       const std::vector<Assignment>& assignments) {
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t matched, std::size_t from) {
    if (matched == u.size())
      return in_kernel(h, Word(v.begin() + static_cast<std::ptrdiff_t>(from), v.end()), assignments);
    for (std::size_t i = from; i < v.size(); ++i)
      if (v[i] == u[matched] &&
          in_kernel(h, Word(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(i)),
                    assignments) &&
          go(matched + 1, i + 1))
        return true;
    return false;
  };
  return go(0, 0);
}

std::shared_ptr<const FiniteGroup> group(FiniteGroup g) {
  return std::make_shared<const FiniteGroup>(std::move(g));
}

} // namespace

TEST_CASE("kernel automaton over Z2 accepts words with even letter counts") {
  const auto k = kernel_automaton(z2(), 2);
  for (const auto& w : words_up_to(2, 8)) {
    const auto xs = std::count(w.begin(), w.end(), 0u);
    CHECK(automata::membership(*k, w) == (xs % 2 == 0 && (w.size() - static_cast<std::size_t>(xs)) % 2 == 0));
  }
  CHECK(automata::membership(*k, Word{}));
}

TEST_CASE("evaluation classes coincide with evaluation tables") {
  for (const auto& h : {z2(), group(FiniteGroup::cyclic(3)), group(FiniteGroup::symmetric3())}) {
    for (std::size_t letters : {1u, 2u}) {
      auto space = std::make_shared<EvalClassSpace>(h, letters);
      CHECK(space->uses_counts() == h->is_abelian());
      const auto assignments = all_assignments(*h, letters);
      std::map<std::vector<FiniteGroup::Element>, EvalClass> seen;
      for (const auto& w : words_up_to(letters, letters == 1 ? 8 : 6)) {
        const auto t = table_of(*h, w, assignments);
        const EvalClass c = space->class_of(w);
        auto [it, fresh] = seen.emplace(t, c);
        CHECK(it->second == c);
        CHECK(space->is_identity(c) == in_kernel(*h, w, assignments));
      }
      // Distinct tables get distinct classes.
      std::set<EvalClass> ids;
      for (const auto& [t, c] : seen)
        ids.insert(c);
      CHECK(ids.size() == seen.size());
    }
  }
}

TEST_CASE("S3 kernel examples") {
  auto space = std::make_shared<EvalClassSpace>(group(FiniteGroup::symmetric3()), 2);
  CHECK_FALSE(space->uses_counts());
  CHECK(space->is_identity(space->class_of(Word{0, 0, 0, 0, 0, 0})));
  CHECK_FALSE(space->is_identity(space->class_of(Word{0, 0})));
  CHECK_FALSE(space->is_identity(space->class_of(Word{0, 0, 0})));
  // x y x^-1 y^-1 = x y x^5 y^5 is not a law of S3.
  CHECK_FALSE(space->is_identity(space->class_of(Word{0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1})));
}

TEST_CASE("wqo order matches brute-force embeddings and upward closures") {
  for (const auto& h : {z2(), group(FiniteGroup::symmetric3())}) {
    auto space = std::make_shared<EvalClassSpace>(h, 2);
    const auto assignments = all_assignments(*h, 2);
    UpwardClosureSet set(space);
    const std::vector<Word> us{{}, {0}, {1, 0}, {0, 0, 1}};
    std::vector<automata::Nfa> closures;
    for (const auto& u : us) {
      closures.push_back(upward_closure(u, space));
      set.add(u);
    }
    const std::size_t max_len = h->order() == 2 ? 7 : 6;
    for (const auto& v : words_up_to(2, max_len)) {
      bool any = false;
      for (std::size_t i = 0; i < us.size(); ++i) {
        const bool below = leq_by_embeddings(*h, us[i], v, assignments);
        any = any || below;
        CHECK(wqo_leq(us[i], v, *space) == below);
        CHECK(automata::membership(closures[i], v) == below);
      }
      CHECK(set.contains(v) == any);
      CHECK(automata::membership(set, v) == any);
    }
  }
}

TEST_CASE("wqo order is reflexive and transitive on samples") {
  std::mt19937 rng(21);
  auto space = std::make_shared<EvalClassSpace>(z2(), 2);
  auto random_word = [&](std::size_t max_len) {
    Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
    for (auto& s : w)
      s = std::uniform_int_distribution<Symbol>(0, 1)(rng);
    return w;
  };
  for (int i = 0; i < 400; ++i) {
    const Word u = random_word(3);
    CHECK(wqo_leq(u, u, *space));
    // Inserting kernel words keeps u below.
    Word v;
    for (Symbol s : u) {
      if (std::bernoulli_distribution(0.5)(rng))
        v.insert(v.end(), {1, 1});
      v.push_back(s);
    }
    if (std::bernoulli_distribution(0.5)(rng))
      v.insert(v.end(), {0, 1, 0, 1});
    CHECK(wqo_leq(u, v, *space));
    const Word w = random_word(8);
    if (wqo_leq(u, v, *space) && wqo_leq(v, w, *space))
      CHECK(wqo_leq(u, w, *space));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  const auto s3 = FiniteGroup::symmetric3();
  std::mt19937 rng(3);
  std::vector<std::uint32_t> in(6 * 6 * 6 * 6 * 6 * 6 * 6);
  for (auto& x : in)
    x = std::uniform_int_distribution<std::uint32_t>(0, 5)(rng);
  for (std::size_t stride : {1u, 6u, 216u}) {
    std::vector<std::uint32_t> a(in.size()), b(in.size());
    kernels::eval_table_step_serial(s3, in, a, stride);
    kernels::eval_table_step_parallel(s3, in, b, stride);
    CHECK(a == b);
    CHECK(a[stride] == s3.mul(in[stride], 1));
  }

  std::vector<std::uint64_t> items(5000);
  std::iota(items.begin(), items.end(), 0);
  std::vector<std::uint64_t> x, y;
  auto fn = [](std::uint64_t v, std::size_t j) { return v * 7 + j * j; };
  kernels::expand_serial(std::span<const std::uint64_t>(items), 5, x, fn);
  kernels::expand_parallel(std::span<const std::uint64_t>(items), 5, y, fn);
  CHECK(x == y);

  auto serial = std::make_shared<EvalClassSpace>(group(FiniteGroup::symmetric3()), 5,
                                                 automata::kDefaultStateCap, kernels::Mode::Serial);
  auto parallel = std::make_shared<EvalClassSpace>(group(FiniteGroup::symmetric3()), 5,
                                                   automata::kDefaultStateCap, kernels::Mode::Parallel);
  for (const auto& w : words_up_to(5, 3))
    CHECK(serial->class_of(w) == parallel->class_of(w));
  CHECK(serial->size() == parallel->size());
}

TEST_CASE("non-abelian tables over too many letters are refused") {
  CHECK_THROWS_AS(EvalClassSpace(group(FiniteGroup::symmetric3()), 12, automata::kDefaultStateCap,
                                 kernels::Mode::Serial, 1000),
                  automata::ResourceExhausted);
}
