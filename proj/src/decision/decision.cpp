#include "wreath/decision/decision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "wreath/groups/wreath.hpp"

namespace wreath::decision {

using loops::Edge;

namespace {

std::string fresh_name(std::unordered_set<std::string>& taken, std::string base) {
  while (taken.contains(base))
    base += '\'';
  taken.insert(base);
  return base;
}

std::vector<StateId> sorted_finals(const NormalizedAutomaton& a) {
  std::vector<StateId> f = a.finals;
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

} // namespace

NormalizedAutomaton normalize(const RawAutomaton& raw) {
  NormalizedAutomaton a;
  a.group = raw.group;
  a.rank = raw.rank;
  a.state_names = raw.state_names;
  a.initial = raw.initial;
  a.finals = raw.finals;
  std::unordered_set<std::string> taken(raw.state_names.begin(), raw.state_names.end());
  if (taken.size() != raw.state_names.size())
    throw std::invalid_argument("duplicate state names");

  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const RawEdge& e = raw.edges[i];
    if (e.from >= raw.state_names.size() || e.to >= raw.state_names.size())
      throw std::invalid_argument("edge endpoint out of range");
    if (e.label.empty()) {
      a.edges.push_back({e.from, LampToken{raw.group->identity()}, e.to});
      continue;
    }
    StateId current = e.from;
    for (std::size_t j = 0; j < e.label.size(); ++j) {
      StateId next = e.to;
      if (j + 1 < e.label.size())
        next = a.add_state(fresh_name(taken, raw.state_names[e.from] + "." + std::to_string(i) +
                                                 "." + std::to_string(j + 1)));
      a.edges.push_back({current, e.label[j], next});
      current = next;
    }
  }
  a.validate();
  return a;
}

NormalizedAutomaton reduce_target(const NormalizedAutomaton& a, const TokenWord& g) {
  NormalizedAutomaton b = a;
  std::unordered_set<std::string> taken(a.state_names.begin(), a.state_names.end());
  const StateId hub = b.add_state(fresh_name(taken, "target"));
  for (StateId f : sorted_finals(a))
    b.edges.push_back({f, LampToken{a.group->identity()}, hub});
  const TokenWord inverse = invert_tokens(g, *a.group);
  StateId current = hub;
  for (std::size_t j = 0; j < inverse.size(); ++j) {
    const StateId next = b.add_state(fresh_name(taken, "target." + std::to_string(j + 1)));
    b.edges.push_back({current, inverse[j], next});
    current = next;
  }
  b.finals = {current};
  b.validate();
  return b;
}

std::string to_string(Answer a) {
  switch (a) {
  case Answer::Yes:
    return "member";
  case Answer::No:
    return "non-member";
  case Answer::ResourceExhausted:
    return "resource-exhausted";
  }
  return "unknown";
}

bool validate_certificate(const patterns::PatternFamily& family, const automata::Word& cert,
                          StateId final_state) {
  const auto& a = family.automaton();
  const auto& y = family.alphabets();
  const NodeType root = NodeType::root();
  StateId at = a.initial;
  FiniteGroup::Element product = a.group->identity();
  automata::Word loops_only;
  for (automata::Symbol letter : cert) {
    if (letter >= y.y_size(root))
      return false;
    const auto [from, to] = y.endpoints(root, letter);
    if (from != at)
      return false;
    at = to;
    if (y.is_loop_letter(root, letter))
      loops_only.push_back(letter);
    else
      product = a.group->mul(product, y.lamp_edges[letter - y.x_size(root)].lamp());
  }
  return at == final_state && a.group->is_identity(product) &&
         family.contains(root, loops_only);
}

Verdict decide_identity(const NormalizedAutomaton& a, DecideOptions options) {
  a.validate();
  Verdict v;
  auto family = patterns::saturate(a, {options.cap, options.mode});
  v.rounds = family.rounds();
  v.witnesses = family.witnesses();
  v.trace = family.trace_lines();
  if (!family.complete()) {
    v.answer = Answer::ResourceExhausted;
    v.error = family.error();
    v.explored = family.explored();
    return v;
  }

  const NodeType root = NodeType::root();
  v.answer = Answer::No;
  try {
    for (StateId q : sorted_finals(a)) {
      auto paths = automata::determinize(
          patterns::path_language(family.alphabets(), root, a.initial, q, a.num_states()),
          options.cap);
      family.track(paths);
      auto search = automata::intersect(family.restricted(root), paths, options.cap);
      family.track(search);
      auto w = automata::emptiness_witness(*search);
      if (!w)
        continue;
      if (!validate_certificate(family, *w, q))
        throw std::logic_error("certificate failed re-validation");
      v.answer = Answer::Yes;
      v.final_state = q;
      v.certificate_text = patterns::format_word(a, family.alphabets(), root, *w);
      v.certificate = std::move(w);
      break;
    }
  } catch (const automata::ResourceExhausted& e) {
    v.answer = Answer::ResourceExhausted;
    v.error = e.what();
  }
  v.explored = family.explored();
  return v;
}

bool benois_oracle(const NormalizedAutomaton& a) {
  a.validate();
  const std::size_t n = a.num_states();
  std::vector<bool> eps(n * n);
  std::vector<const Edge*> moves;
  for (std::size_t q = 0; q < n; ++q)
    eps[q * n + q] = true;
  for (const Edge& e : a.edges) {
    if (e.is_lamp()) {
      if (!a.group->is_identity(e.lamp()))
        throw std::invalid_argument("Benois saturation needs identity lamp labels");
      eps[e.from * n + e.to] = true;
    } else {
      moves.push_back(&e);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (eps[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (eps[k * n + j] && !eps[i * n + j]) {
              eps[i * n + j] = true;
              changed = true;
            }
    for (const Edge* down : moves)
      for (const Edge* up : moves)
        if (up->direction() == down->direction().inverse() && eps[down->to * n + up->from] &&
            !eps[down->from * n + up->to]) {
          eps[down->from * n + up->to] = true;
          changed = true;
        }
  }
  for (StateId f : a.finals)
    if (eps[a.initial * n + f])
      return true;
  return false;
}

PathOracleResult path_oracle(const NormalizedAutomaton& a, std::size_t max_length,
                             kernels::Mode mode) {
  a.validate();
  const LampFreeGroup g = make_lamp_free_group(a.group, a.rank);
  std::vector<LampFreeElement> labels;
  for (const Edge& e : a.edges)
    labels.push_back(token_element(g, e.label));

  struct Node {
    StateId state;
    LampFreeElement x;
    std::size_t parent;
    std::size_t edge;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{a.initial, g.identity(), kNone, kNone}};
  std::set<std::pair<StateId, LampFreeElement>> seen{{a.initial, g.identity()}};

  PathOracleResult result;
  auto finish = [&](std::size_t node) {
    result.found = true;
    for (std::size_t i = node; nodes[i].parent != kNone; i = nodes[i].parent)
      result.path.push_back(nodes[i].edge);
    std::reverse(result.path.begin(), result.path.end());
  };
  if (a.is_final(a.initial)) {
    finish(0);
    result.explored = nodes.size();
    return result;
  }

  std::vector<std::size_t> frontier{0};
  std::vector<std::optional<LampFreeElement>> expanded;
  for (std::size_t length = 1; length <= max_length && !frontier.empty(); ++length) {
    kernels::expand(mode, std::span<const std::size_t>(frontier), a.edges.size(), expanded,
                    [&](std::size_t node, std::size_t j) -> std::optional<LampFreeElement> {
                      if (a.edges[j].from != nodes[node].state)
                        return std::nullopt;
                      return g.mul(nodes[node].x, labels[j]);
                    });
    std::vector<std::size_t> next;
    for (std::size_t k = 0; k < expanded.size(); ++k) {
      if (!expanded[k])
        continue;
      const std::size_t parent = frontier[k / a.edges.size()];
      const std::size_t j = k % a.edges.size();
      const StateId to = a.edges[j].to;
      if (!seen.insert({to, *expanded[k]}).second)
        continue;
      nodes.push_back({to, std::move(*expanded[k]), parent, j});
      if (a.is_final(to) && g.is_identity(nodes.back().x)) {
        finish(nodes.size() - 1);
        result.explored = nodes.size();
        return result;
      }
      next.push_back(nodes.size() - 1);
    }
    frontier = std::move(next);
  }
  result.explored = nodes.size();
  return result;
}

} // namespace wreath::decision
