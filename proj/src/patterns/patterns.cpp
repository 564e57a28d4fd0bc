#include "wreath/patterns/patterns.hpp"

#include <algorithm>
#include <set>

#include "wreath/groups/wreath.hpp"

namespace wreath::patterns {

using automata::LazyDfa;
using automata::Nfa;

// ---- alphabets ----------------------------------------------------------------

std::optional<Symbol> PatternAlphabets::index_of(NodeType t, const LoopLetter& x) const {
  const auto& letters = loops[t.index()];
  auto it = std::lower_bound(letters.begin(), letters.end(), x);
  if (it == letters.end() || !(*it == x))
    return std::nullopt;
  return static_cast<Symbol>(it - letters.begin());
}

std::pair<StateId, StateId> PatternAlphabets::endpoints(NodeType t, Symbol y) const {
  if (is_loop_letter(t, y)) {
    const auto& x = loops[t.index()][y];
    return {x.p, x.q};
  }
  const Edge& e = lamp_edges.at(y - x_size(t));
  return {e.from, e.to};
}

automata::LetterMorphism PatternAlphabets::projection(NodeType t) const {
  automata::LetterMorphism phi(y_size(t));
  for (Symbol y = 0; y < x_size(t); ++y)
    phi[y] = {y};
  return phi;
}

std::vector<FiniteGroup::Element> PatternAlphabets::lamp_values(NodeType t,
                                                                const FiniteGroup& h) const {
  std::vector<FiniteGroup::Element> nu(y_size(t), h.identity());
  for (std::size_t i = 0; i < lamp_edges.size(); ++i)
    nu[x_size(t) + i] = lamp_edges[i].lamp();
  return nu;
}

PatternAlphabets build_alphabets(const NormalizedAutomaton& a, const loops::LoopAlphabets& x) {
  PatternAlphabets y;
  y.rank = a.rank;
  y.loops = x;
  for (const Edge& e : a.edges)
    if (e.is_lamp() && std::find(y.lamp_edges.begin(), y.lamp_edges.end(), e) == y.lamp_edges.end())
      y.lamp_edges.push_back(e);
  return y;
}

PatternAlphabets build_alphabets(const NormalizedAutomaton& a) {
  return build_alphabets(a, loops::compute_X(a));
}

std::string format_letter(const NormalizedAutomaton& a, const PatternAlphabets& y, NodeType t,
                          Symbol letter) {
  const auto [p, q] = y.endpoints(t, letter);
  std::string middle;
  if (y.is_loop_letter(t, letter))
    middle = y.loops[t.index()][letter].d.name();
  else
    middle = "g:" + a.group->element_name(y.lamp_edges[letter - y.x_size(t)].lamp());
  return "(" + a.state_names[p] + "," + middle + "," + a.state_names[q] + ")";
}

std::string format_word(const NormalizedAutomaton& a, const PatternAlphabets& y, NodeType t,
                        std::span<const Symbol> word) {
  if (word.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += format_letter(a, y, t, word[i]);
  }
  return out;
}

// ---- path languages and substitutions -----------------------------------------

Nfa path_language(const PatternAlphabets& y, NodeType t, StateId p, StateId q,
                  std::size_t num_states) {
  Nfa r(y.y_size(t));
  for (std::size_t s = 0; s < num_states; ++s)
    r.add_state(s == q);
  r.set_initial(p);
  for (Symbol letter = 0; letter < y.y_size(t); ++letter) {
    const auto [from, to] = y.endpoints(t, letter);
    r.add_transition(from, letter, to);
  }
  return r;
}

automata::RegularSubstitution build_sigma(const NormalizedAutomaton& a, const PatternAlphabets& y,
                                          NodeType t, Direction d) {
  const NodeType below = NodeType::of(d);
  automata::RegularSubstitution sigma;
  sigma.target_alphabet_size = y.y_size(below);
  auto epsilon = std::make_shared<const Nfa>(automata::epsilon_language(sigma.target_alphabet_size));

  for (const LoopLetter& x : y.loops[t.index()]) {
    if (x.d != d) {
      sigma.images.push_back(epsilon);
      continue;
    }
    // Group the (p', q') pairs by p' so every group is one path automaton
    // with several final states.
    std::map<StateId, std::set<StateId>> pairs;
    for (const Edge& down : a.edges) {
      if (!down.is_direction() || down.direction() != d || down.from != x.p)
        continue;
      for (const Edge& up : a.edges)
        if (up.is_direction() && up.direction() == d.inverse() && up.to == x.q)
          pairs[down.to].insert(up.from);
    }
    Nfa image = automata::empty_language(sigma.target_alphabet_size);
    for (const auto& [start, ends] : pairs) {
      Nfa r = path_language(y, below, start, *ends.begin(), a.num_states());
      for (StateId e : ends)
        r.set_final(e);
      image = automata::union_of(image, r);
    }
    sigma.images.push_back(std::make_shared<const Nfa>(std::move(image)));
  }
  return sigma;
}

// ---- PatternFamily ------------------------------------------------------------

PatternFamily::PatternFamily(NormalizedAutomaton a, PatternAlphabets y, SaturationOptions options)
    : a_(std::move(a)), y_(std::move(y)), options_(options) {
  const std::size_t types = static_cast<std::size_t>(2 * a_.rank + 1);
  restricted_.resize(types);
  candidates_.resize(types);
  snapshots_.resize(types);
  versions_.assign(types, 0);
  for (std::size_t i = 0; i < types; ++i) {
    const NodeType t = NodeType::from_index(i);
    auto space = std::make_shared<wqo::EvalClassSpace>(a_.group, y_.x_size(t), options_.cap,
                                                       options_.mode);
    auto set = std::make_shared<wqo::UpwardClosureSet>(space, options_.cap);
    set->add(std::vector<Symbol>{});
    spaces_.push_back(std::move(space));
    sets_.push_back(std::move(set));
  }
}

bool PatternFamily::contains(NodeType t, std::span<const Symbol> w) const {
  if (sets_[t.index()]->contains(w))
    return true;
  const auto& snap = snapshots_[t.index()];
  return snap && automata::membership(*snap, w);
}

void PatternFamily::grow(NodeType t, Word witness, std::shared_ptr<LazyDfa> candidate) {
  sets_[t.index()]->add(witness);
  snapshots_[t.index()] = std::move(candidate);
  ++versions_[t.index()];
  log_.push_back({rounds_ + 1, t, std::move(witness)});
}

void PatternFamily::track(const std::shared_ptr<LazyDfa>& dfa) { live_.push_back(dfa); }

void PatternFamily::sweep() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = live_.begin(); it != live_.end();) {
      if (it->use_count() == 1) {
        retired_ += (*it)->explored();
        it = live_.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
}

std::size_t PatternFamily::explored() {
  sweep();
  std::size_t total = retired_;
  for (const auto& d : live_)
    total += d->explored();
  return total;
}

std::shared_ptr<LazyDfa> PatternFamily::dfa(NodeType t) {
  auto d = automata::determinize(std::static_pointer_cast<automata::NfaLike>(sets_[t.index()]),
                                 options_.cap);
  // Pin the current generators; later additions must not leak into this view.
  d->initial();
  track(d);
  if (const auto& snap = snapshots_[t.index()]) {
    d = automata::unite({d, snap}, options_.cap);
    track(d);
  }
  return d;
}

std::vector<std::size_t> PatternFamily::versions_of(NodeType t) const {
  std::vector<std::size_t> v;
  for (Direction d : children_types(t, a_.rank))
    v.push_back(version(NodeType::of(d)));
  return v;
}

std::shared_ptr<LazyDfa> PatternFamily::restricted(NodeType below) {
  auto& slot = restricted_[below.index()];
  const std::vector<std::size_t> v{version(below)};
  if (slot.value && slot.versions == v)
    return slot.value;

  auto patterns = automata::inverse_morphism(dfa(below), y_.projection(below), options_.cap);
  track(patterns);
  const auto nu = y_.lamp_values(below, *a_.group);
  auto balanced = automata::determinize(automata::kernel_preimage(*a_.group, nu, a_.group->identity()),
                                        options_.cap);
  track(balanced);
  auto result = automata::intersect(patterns, balanced, options_.cap);
  track(result);
  slot = {v, result};
  return result;
}

std::shared_ptr<LazyDfa> PatternFamily::candidate(NodeType t) {
  auto& slot = candidates_[t.index()];
  const auto v = versions_of(t);
  if (slot.value && slot.versions == v)
    return slot.value;

  std::vector<std::shared_ptr<LazyDfa>> parts;
  for (Direction d : children_types(t, a_.rank)) {
    const std::pair key{t.index(), d.index()};
    auto sigma_it = sigmas_.find(key);
    if (sigma_it == sigmas_.end())
      sigma_it = sigmas_.emplace(key, build_sigma(a_, y_, t, d)).first;

    auto& pre = preimages_[key];
    const std::vector<std::size_t> dv{version(NodeType::of(d))};
    if (!pre.value || pre.versions != dv) {
      auto view = automata::inverse_substitution(sigma_it->second, restricted(NodeType::of(d)));
      pre = {dv, automata::determinize(view, options_.cap)};
      track(pre.value);
    }
    parts.push_back(pre.value);
  }
  std::shared_ptr<LazyDfa> result;
  if (parts.empty()) {
    result = automata::determinize(automata::universal_language(y_.x_size(t)), options_.cap);
  } else {
    result = automata::intersect(parts, options_.cap);
  }
  track(result);
  slot = {v, result};
  return result;
}

std::vector<std::string> PatternFamily::trace_lines() const {
  std::vector<std::string> lines;
  for (const auto& step : log_)
    lines.push_back("round=" + std::to_string(step.round) + " type=" + step.type.name() +
                    " witness=" + format_word(a_, y_, step.type, step.witness));
  return lines;
}

PatternFamily saturate(const NormalizedAutomaton& a, SaturationOptions options) {
  PatternFamily family(a, build_alphabets(a), options);

  std::vector<NodeType> order;
  for (NodeType t : all_node_types(a.rank))
    if (!t.is_root())
      order.push_back(t);
  order.push_back(NodeType::root());

  try {
    bool grew = true;
    while (grew) {
      grew = false;
      for (NodeType t : order) {
        for (;;) {
          auto outside = automata::complement(family.dfa(t), options.cap);
          family.track(outside);
          auto candidate = family.candidate(t);
          auto search = automata::intersect(candidate, outside, options.cap);
          family.track(search);
          auto w = automata::emptiness_witness(*search);
          if (!w)
            break;
          family.grow(t, std::move(*w), candidate);
          grew = true;
        }
      }
      if (grew)
        ++family.rounds_;
    }
    family.complete_ = true;
  } catch (const automata::ResourceExhausted& e) {
    family.error_ = e.what();
  }
  return family;
}

// ---- brute-force oracle -------------------------------------------------------

namespace {

using Effect = LampFreeElement;

/// Effects of all (p, d, q)-loops within the bounds, keyed by q.
std::map<StateId, std::set<Effect>> loop_effects(const NormalizedAutomaton& a,
                                                 const LampFreeGroup& g, StateId p, Direction d,
                                                 std::size_t max_depth, std::size_t max_length) {
  std::map<StateId, std::set<Effect>> found;
  if (max_length < 2 || max_depth < 1)
    return found;
  using Config = std::pair<StateId, Effect>;
  std::set<Config> seen;
  std::vector<Config> frontier;
  const Effect down = g.move(reduce(std::vector<Direction>{d}));
  for (const Edge& e : a.edges)
    if (e.is_direction() && e.direction() == d && e.from == p)
      if (seen.insert({e.to, down}).second)
        frontier.push_back({e.to, down});

  for (std::size_t length = 1; length < max_length && !frontier.empty(); ++length) {
    std::vector<Config> next;
    for (const auto& [state, x] : frontier) {
      for (const Edge& e : a.edges) {
        if (e.from != state)
          continue;
        Effect y = g.mul(x, token_element(g, e.label));
        if (e.is_direction()) {
          if (y.cursor.empty()) {
            found[e.to].insert(std::move(y));
            continue;
          }
          if (y.cursor.letters().front() != d || y.cursor.length() > max_depth)
            continue;
        }
        if (seen.insert({e.to, y}).second)
          next.push_back({e.to, std::move(y)});
      }
    }
    frontier = std::move(next);
  }
  return found;
}

} // namespace

bool brute_force_pattern_oracle(const NormalizedAutomaton& a, const PatternAlphabets& y,
                                NodeType t, std::span<const Symbol> w, std::size_t max_depth,
                                std::size_t max_length) {
  const LampFreeGroup g = make_lamp_free_group(a.group, a.rank);
  std::map<std::pair<StateId, std::size_t>, std::map<StateId, std::set<Effect>>> memo;
  std::set<Effect> partial{g.identity()};
  for (Symbol letter : w) {
    if (!y.is_loop_letter(t, letter))
      return false;
    const LoopLetter& x = y.loops[t.index()][letter];
    const std::pair key{x.p, x.d.index()};
    auto it = memo.find(key);
    if (it == memo.end())
      it = memo.emplace(key, loop_effects(a, g, x.p, x.d, max_depth, max_length)).first;
    auto effects = it->second.find(x.q);
    if (effects == it->second.end())
      return false;
    std::set<Effect> next;
    for (const Effect& e0 : partial)
      for (const Effect& e1 : effects->second)
        next.insert(g.mul(e0, e1));
    partial = std::move(next);
  }
  return partial.contains(g.identity());
}

} // namespace wreath::patterns
