#include "wreath/automata/operations.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace wreath::automata {

namespace {

void require_same_alphabet(std::size_t a, std::size_t b) {
  if (a != b)
    throw AlphabetMismatch("alphabet sizes differ: " + std::to_string(a) + " vs " +
                           std::to_string(b));
}

void sort_unique(std::vector<State>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Copies b into a (states shifted), returning the offset.
State append(Nfa& into, const Nfa& from) {
  const State offset = static_cast<State>(into.num_states());
  for (State s = 0; s < from.num_states(); ++s)
    into.add_state(false);
  for (State s = 0; s < from.num_states(); ++s)
    for (const Transition& t : from.transitions(s))
      into.add_transition(offset + s, t.symbol, offset + t.target);
  return offset;
}

class SubsetSource final : public DfaSource {
public:
  explicit SubsetSource(std::shared_ptr<NfaLike> nfa) : nfa_(std::move(nfa)) {}
  std::size_t alphabet_size() const override { return nfa_->alphabet_size(); }
  Key initial() override {
    Key k = nfa_->initial_states();
    sort_unique(k);
    return k;
  }
  Key next(const Key& from, Symbol a) override {
    std::vector<State> out;
    for (State s : from)
      nfa_->successors(s, a, out);
    sort_unique(out);
    return out;
  }
  bool accepting(const Key& k) override {
    for (State s : k)
      if (nfa_->is_final(s))
        return true;
    return false;
  }

private:
  std::shared_ptr<NfaLike> nfa_;
};

class ProductSource final : public DfaSource {
public:
  ProductSource(std::vector<std::shared_ptr<LazyDfa>> parts, bool any)
      : parts_(std::move(parts)), any_(any) {
    for (const auto& p : parts_)
      require_same_alphabet(p->alphabet_size(), parts_.front()->alphabet_size());
  }
  std::size_t alphabet_size() const override { return parts_.front()->alphabet_size(); }
  Key initial() override {
    Key k;
    for (const auto& p : parts_)
      k.push_back(p->initial());
    return k;
  }
  Key next(const Key& from, Symbol a) override {
    Key k(from.size());
    for (std::size_t i = 0; i < parts_.size(); ++i)
      k[i] = parts_[i]->next(from[i], a);
    return k;
  }
  bool accepting(const Key& k) override {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i]->accepting(k[i]) == any_)
        return any_;
    return !any_;
  }

private:
  std::vector<std::shared_ptr<LazyDfa>> parts_;
  bool any_;
};

class ComplementSource final : public DfaSource {
public:
  explicit ComplementSource(std::shared_ptr<LazyDfa> dfa) : dfa_(std::move(dfa)) {}
  std::size_t alphabet_size() const override { return dfa_->alphabet_size(); }
  Key initial() override { return {dfa_->initial()}; }
  Key next(const Key& from, Symbol a) override { return {dfa_->next(from[0], a)}; }
  bool accepting(const Key& k) override { return !dfa_->accepting(k[0]); }

private:
  std::shared_ptr<LazyDfa> dfa_;
};

class InverseMorphismSource final : public DfaSource {
public:
  InverseMorphismSource(std::shared_ptr<LazyDfa> dfa, LetterMorphism phi)
      : dfa_(std::move(dfa)), phi_(std::move(phi)) {}
  std::size_t alphabet_size() const override { return phi_.size(); }
  Key initial() override { return {dfa_->initial()}; }
  Key next(const Key& from, Symbol a) override {
    State s = from[0];
    for (Symbol b : phi_[a])
      s = dfa_->next(s, b);
    return {s};
  }
  bool accepting(const Key& k) override { return dfa_->accepting(k[0]); }

private:
  std::shared_ptr<LazyDfa> dfa_;
  LetterMorphism phi_;
};

class InverseSubstitutionView final : public NfaLike {
public:
  InverseSubstitutionView(RegularSubstitution sigma, std::shared_ptr<NfaLike> r)
      : sigma_(std::move(sigma)), r_(std::move(r)) {
    for (const auto& image : sigma_.images) {
      require_same_alphabet(image->alphabet_size(), r_->alphabet_size());
      std::vector<std::vector<State>> closures(image->num_states());
      for (State s = 0; s < image->num_states(); ++s)
        closures[s] = image->epsilon_closure({s});
      closures_.push_back(std::move(closures));
    }
  }

  std::size_t alphabet_size() const override { return sigma_.images.size(); }
  std::vector<State> initial_states() override { return r_->initial_states(); }
  bool is_final(State s) override { return r_->is_final(s); }

  void successors(State s, Symbol a, std::vector<State>& out) override {
    const std::uint64_t memo_key = (static_cast<std::uint64_t>(s) << 32) | a;
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(memo_key);
      if (it != memo_.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        return;
      }
    }
    std::vector<State> result = compute(s, a);
    out.insert(out.end(), result.begin(), result.end());
    std::lock_guard lock(mutex_);
    memo_.emplace(memo_key, std::move(result));
  }

private:
  /// Pairs (image state, r state) reachable from (image start, s); the r
  /// states paired with a final image state are the successors.
  std::vector<State> compute(State s, Symbol a) {
    const Nfa& image = *sigma_.images[a];
    const auto& closures = closures_[a];
    std::vector<State> result;
    if (image.num_states() == 0)
      return result;
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::pair<State, State>> queue;
    auto push = [&](State u, State v) {
      if (seen.insert((static_cast<std::uint64_t>(u) << 32) | v).second)
        queue.emplace_back(u, v);
    };
    for (State u : closures[image.initial()])
      push(u, s);
    std::vector<State> next;
    while (!queue.empty()) {
      auto [u, v] = queue.front();
      queue.pop_front();
      if (image.is_final(u))
        result.push_back(v);
      for (const Transition& t : image.transitions(u)) {
        if (t.symbol == kEpsilon)
          continue;
        next.clear();
        r_->successors(v, t.symbol, next);
        for (State u2 : closures[t.target])
          for (State v2 : next)
            push(u2, v2);
      }
    }
    sort_unique(result);
    return result;
  }

  RegularSubstitution sigma_;
  std::shared_ptr<NfaLike> r_;
  std::vector<std::vector<std::vector<State>>> closures_;
  std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::vector<State>> memo_;
};

} // namespace

// ---- basic languages ---------------------------------------------------------

Nfa empty_language(std::size_t alphabet_size) {
  Nfa n(alphabet_size);
  n.set_initial(n.add_state(false));
  return n;
}

Nfa epsilon_language(std::size_t alphabet_size) {
  Nfa n(alphabet_size);
  n.set_initial(n.add_state(true));
  return n;
}

Nfa universal_language(std::size_t alphabet_size) {
  Nfa n(alphabet_size);
  State s = n.add_state(true);
  n.set_initial(s);
  for (Symbol a = 0; a < alphabet_size; ++a)
    n.add_transition(s, a, s);
  return n;
}

Nfa singleton(std::span<const Symbol> word, std::size_t alphabet_size) {
  Nfa n(alphabet_size);
  State s = n.add_state(word.empty());
  n.set_initial(s);
  for (std::size_t i = 0; i < word.size(); ++i) {
    State t = n.add_state(i + 1 == word.size());
    n.add_transition(s, word[i], t);
    s = t;
  }
  return n;
}

Nfa union_of(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet_size(), b.alphabet_size());
  Nfa n(a.alphabet_size());
  State start = n.add_state(false);
  n.set_initial(start);
  for (const Nfa* part : {&a, &b}) {
    if (part->num_states() == 0)
      continue;
    State off = append(n, *part);
    for (State s = 0; s < part->num_states(); ++s)
      n.set_final(off + s, part->is_final(s));
    n.add_transition(start, kEpsilon, off + part->initial());
  }
  return n;
}

Nfa concat(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet_size(), b.alphabet_size());
  if (a.num_states() == 0 || b.num_states() == 0)
    return empty_language(a.alphabet_size());
  Nfa n(a.alphabet_size());
  State off_a = append(n, a);
  State off_b = append(n, b);
  n.set_initial(off_a + a.initial());
  for (State s = 0; s < a.num_states(); ++s)
    if (a.is_final(s))
      n.add_transition(off_a + s, kEpsilon, off_b + b.initial());
  for (State s = 0; s < b.num_states(); ++s)
    n.set_final(off_b + s, b.is_final(s));
  return n;
}

Nfa intersect(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet_size(), b.alphabet_size());
  auto va = view(a), vb = view(b);
  Nfa n(a.alphabet_size());
  if (a.num_states() == 0 || b.num_states() == 0)
    return empty_language(a.alphabet_size());
  std::unordered_map<std::uint64_t, State> ids;
  std::deque<std::pair<State, State>> queue;
  auto id_of = [&](State x, State y) {
    const std::uint64_t k = (static_cast<std::uint64_t>(x) << 32) | y;
    auto it = ids.find(k);
    if (it != ids.end())
      return it->second;
    State s = n.add_state(a.is_final(x) && b.is_final(y));
    ids.emplace(k, s);
    queue.emplace_back(x, y);
    return s;
  };
  // Closed initial sets may hold several states; a fresh start fans out to all pairs.
  State start = n.add_state(false);
  n.set_initial(start);
  for (State x : va->initial_states())
    for (State y : vb->initial_states())
      n.add_transition(start, kEpsilon, id_of(x, y));
  std::vector<State> sa, sb;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    const State from = ids.at((static_cast<std::uint64_t>(x) << 32) | y);
    for (Symbol c = 0; c < a.alphabet_size(); ++c) {
      sa.clear();
      sb.clear();
      va->successors(x, c, sa);
      if (sa.empty())
        continue;
      vb->successors(y, c, sb);
      sort_unique(sa);
      sort_unique(sb);
      for (State x2 : sa)
        for (State y2 : sb)
          n.add_transition(from, c, id_of(x2, y2));
    }
  }
  return n;
}

bool membership(NfaLike& x, std::span<const Symbol> word) {
  std::vector<State> current = x.initial_states();
  std::vector<State> next;
  for (Symbol a : word) {
    next.clear();
    for (State s : current)
      x.successors(s, a, next);
    sort_unique(next);
    current.swap(next);
    if (current.empty())
      return false;
  }
  for (State s : current)
    if (x.is_final(s))
      return true;
  return false;
}

bool membership(const Nfa& x, std::span<const Symbol> word) {
  auto v = view(x);
  return membership(*v, word);
}

// ---- lazy constructions ------------------------------------------------------

std::shared_ptr<LazyDfa> determinize(std::shared_ptr<NfaLike> nfa, std::size_t cap) {
  return std::make_shared<LazyDfa>(std::make_shared<SubsetSource>(std::move(nfa)), cap);
}

std::shared_ptr<LazyDfa> determinize(const Nfa& nfa, std::size_t cap) {
  return determinize(view(nfa), cap);
}

std::shared_ptr<LazyDfa> intersect(std::vector<std::shared_ptr<LazyDfa>> parts, std::size_t cap) {
  if (parts.empty())
    throw std::invalid_argument("intersection of no automata");
  return std::make_shared<LazyDfa>(std::make_shared<ProductSource>(std::move(parts), false), cap);
}

std::shared_ptr<LazyDfa> intersect(std::shared_ptr<LazyDfa> a, std::shared_ptr<LazyDfa> b,
                                   std::size_t cap) {
  return intersect(std::vector{std::move(a), std::move(b)}, cap);
}

std::shared_ptr<LazyDfa> unite(std::vector<std::shared_ptr<LazyDfa>> parts, std::size_t cap) {
  if (parts.empty())
    throw std::invalid_argument("union of no automata");
  return std::make_shared<LazyDfa>(std::make_shared<ProductSource>(std::move(parts), true), cap);
}

std::shared_ptr<LazyDfa> complement(std::shared_ptr<LazyDfa> dfa, std::size_t cap) {
  return std::make_shared<LazyDfa>(std::make_shared<ComplementSource>(std::move(dfa)), cap);
}

std::shared_ptr<LazyDfa> complement(const Nfa& nfa, std::size_t cap) {
  return complement(determinize(nfa, cap), cap);
}

std::optional<Word> emptiness_witness(LazyDfa& dfa) {
  struct Parent {
    State from;
    Symbol via;
  };
  std::unordered_map<State, Parent> parent;
  const State start = dfa.initial();
  auto spell = [&](State s) {
    Word w;
    while (s != start) {
      const Parent& p = parent.at(s);
      w.push_back(p.via);
      s = p.from;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  if (dfa.accepting(start))
    return Word{};
  std::deque<State> queue{start};
  parent.emplace(start, Parent{start, 0});
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    for (Symbol a = 0; a < dfa.alphabet_size(); ++a) {
      const State t = dfa.next(s, a);
      if (!parent.emplace(t, Parent{s, a}).second)
        continue;
      if (dfa.accepting(t))
        return spell(t);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

std::optional<Word> emptiness_witness(const Nfa& nfa, std::size_t cap) {
  auto dfa = determinize(nfa, cap);
  return emptiness_witness(*dfa);
}

Nfa materialize(NfaLike& x, std::size_t cap) {
  Nfa n(x.alphabet_size());
  std::unordered_map<State, State> ids;
  std::deque<State> queue;
  auto id_of = [&](State s) {
    auto it = ids.find(s);
    if (it != ids.end())
      return it->second;
    if (ids.size() >= cap)
      throw ResourceExhausted("materialization exceeded its cap of " + std::to_string(cap) +
                              " states");
    State m = n.add_state(x.is_final(s));
    ids.emplace(s, m);
    queue.push_back(s);
    return m;
  };
  const std::vector<State> init = x.initial_states();
  if (init.size() == 1) {
    n.set_initial(id_of(init.front()));
  } else {
    State start = n.add_state(false);
    n.set_initial(start);
    for (State s : init)
      n.add_transition(start, kEpsilon, id_of(s));
  }
  std::vector<State> succ;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    const State from = ids.at(s);
    for (Symbol a = 0; a < x.alphabet_size(); ++a) {
      succ.clear();
      x.successors(s, a, succ);
      sort_unique(succ);
      for (State t : succ)
        n.add_transition(from, a, id_of(t));
    }
  }
  return n;
}

// ---- morphisms and substitutions ---------------------------------------------

Nfa inverse_morphism(const Nfa& x, const LetterMorphism& phi) {
  auto vx = view(x);
  Nfa n(phi.size());
  for (State s = 0; s < x.num_states(); ++s)
    n.add_state(x.is_final(s));
  if (x.num_states() == 0)
    return empty_language(phi.size());
  n.set_initial(x.initial());
  for (State s = 0; s < x.num_states(); ++s)
    for (const Transition& t : x.transitions(s))
      if (t.symbol == kEpsilon)
        n.add_transition(s, kEpsilon, t.target);
  std::vector<State> current, next;
  for (State s = 0; s < x.num_states(); ++s) {
    for (Symbol a = 0; a < phi.size(); ++a) {
      current = x.epsilon_closure({s});
      for (Symbol b : phi[a]) {
        next.clear();
        for (State c : current)
          vx->successors(c, b, next);
        sort_unique(next);
        current.swap(next);
      }
      for (State t : current)
        n.add_transition(s, a, t);
    }
  }
  return n;
}

std::shared_ptr<LazyDfa> inverse_morphism(std::shared_ptr<LazyDfa> x, LetterMorphism phi,
                                          std::size_t cap) {
  return std::make_shared<LazyDfa>(
      std::make_shared<InverseMorphismSource>(std::move(x), std::move(phi)), cap);
}

Nfa kernel_preimage(const FiniteGroup& h, std::span<const FiniteGroup::Element> nu,
                    FiniteGroup::Element target) {
  Nfa n(nu.size());
  for (std::size_t g = 0; g < h.order(); ++g)
    n.add_state(g == target);
  n.set_initial(h.identity());
  for (FiniteGroup::Element g = 0; g < h.order(); ++g)
    for (Symbol a = 0; a < nu.size(); ++a)
      n.add_transition(g, a, h.mul(g, nu[a]));
  return n;
}

std::shared_ptr<NfaLike> inverse_substitution(RegularSubstitution sigma,
                                              std::shared_ptr<NfaLike> r) {
  return std::make_shared<InverseSubstitutionView>(std::move(sigma), std::move(r));
}

Nfa inverse_substitution(const RegularSubstitution& sigma, const Nfa& r) {
  Nfa n(sigma.images.size());
  if (r.num_states() == 0)
    return empty_language(sigma.images.size());
  for (State s = 0; s < r.num_states(); ++s)
    n.add_state(r.is_final(s));
  n.set_initial(r.initial());
  for (State s = 0; s < r.num_states(); ++s)
    for (const Transition& t : r.transitions(s))
      if (t.symbol == kEpsilon)
        n.add_transition(s, kEpsilon, t.target);
  auto lazy = inverse_substitution(sigma, view(r));
  std::vector<State> succ;
  for (State s = 0; s < r.num_states(); ++s)
    for (Symbol a = 0; a < sigma.images.size(); ++a) {
      succ.clear();
      lazy->successors(s, a, succ);
      sort_unique(succ);
      for (State t : succ)
        n.add_transition(s, a, t);
    }
  return n;
}

} // namespace wreath::automata
