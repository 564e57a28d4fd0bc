#include "wreath/minsky/machine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace wreath::minsky {

std::string to_string(Op op) {
  switch (op) {
  case Op::Inc:
    return "+1";
  case Op::Dec:
    return "-1";
  case Op::Zero:
    return "=0";
  }
  return "?";
}

std::size_t CounterMachine::index(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end())
    throw std::invalid_argument("unknown state '" + name + "'");
  return static_cast<std::size_t>(it - states.begin());
}

bool CounterMachine::is_final(std::size_t q) const {
  return std::find(finals.begin(), finals.end(), q) != finals.end();
}

void CounterMachine::validate() const {
  const std::size_t n = states.size();
  if (std::unordered_set<std::string>(states.begin(), states.end()).size() != n)
    throw std::invalid_argument("duplicate state names");
  if (initial >= n)
    throw std::invalid_argument("initial state out of range");
  for (std::size_t f : finals)
    if (f >= n)
      throw std::invalid_argument("final state out of range");
  for (const Transition& t : transitions) {
    if (t.from >= n || t.to >= n)
      throw std::invalid_argument("transition endpoint out of range");
    if (t.counter != 0 && t.counter != 1)
      throw std::invalid_argument("counter must be 0 or 1");
    if (is_final(t.from))
      throw std::invalid_argument("transition leaves final state '" + states[t.from] + "'");
  }
  if (!side)
    return;
  if (side->size() != n)
    throw std::invalid_argument("partition does not cover every state");
  if ((*side)[initial] != 0)
    throw std::invalid_argument("initial state must be in the first partition block");
  for (const Transition& t : transitions) {
    const int s = (*side)[t.from];
    if (t.counter != s || (*side)[t.to] != 1 - s)
      throw std::invalid_argument("transition " + states[t.from] + " -> " + states[t.to] +
                                  " does not alternate between the counters");
  }
}

std::optional<MachineConfig> fire(const CounterMachine& c, const MachineConfig& cfg,
                                  std::size_t t) {
  const Transition& tr = c.transitions.at(t);
  if (tr.from != cfg.state)
    return std::nullopt;
  MachineConfig next = cfg;
  next.state = tr.to;
  std::uint64_t& v = tr.counter == 0 ? next.c0 : next.c1;
  switch (tr.op) {
  case Op::Inc:
    ++v;
    break;
  case Op::Dec:
    if (v == 0)
      return std::nullopt;
    --v;
    break;
  case Op::Zero:
    if (v != 0)
      return std::nullopt;
    break;
  }
  return next;
}

std::vector<std::pair<MachineConfig, std::size_t>> step(const CounterMachine& c,
                                                        const MachineConfig& cfg) {
  std::vector<std::pair<MachineConfig, std::size_t>> out;
  for (std::size_t t = 0; t < c.transitions.size(); ++t)
    if (auto next = fire(c, cfg, t))
      out.emplace_back(*next, t);
  return out;
}

std::optional<Computation> reach_final(const CounterMachine& c, std::uint64_t m, std::uint64_t n,
                                       std::size_t max_steps) {
  struct Parent {
    MachineConfig from;
    std::size_t transition;
  };
  const MachineConfig start{c.initial, m, n};
  std::map<MachineConfig, std::optional<Parent>> parent{{start, std::nullopt}};
  auto done = [&](const MachineConfig& x) { return c.is_final(x.state) && x.c0 == 0 && x.c1 == 0; };
  auto unwind = [&](MachineConfig x) {
    Computation run;
    run.configs.push_back(x);
    while (const auto& p = parent.at(x)) {
      run.transitions.push_back(p->transition);
      x = p->from;
      run.configs.push_back(x);
    }
    std::reverse(run.configs.begin(), run.configs.end());
    std::reverse(run.transitions.begin(), run.transitions.end());
    return run;
  };
  if (done(start))
    return unwind(start);

  std::vector<MachineConfig> frontier{start};
  for (std::size_t depth = 0; depth < max_steps && !frontier.empty(); ++depth) {
    std::vector<MachineConfig> next;
    for (const MachineConfig& x : frontier)
      for (const auto& [y, t] : step(c, x)) {
        if (!parent.emplace(y, Parent{x, t}).second)
          continue;
        if (done(y))
          return unwind(y);
        next.push_back(y);
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

CounterMachine make_alternating(const CounterMachine& c) {
  c.validate();
  // Node kinds: a pair (q, parity) or the k-th gadget's first/second state.
  struct Node {
    std::size_t q;
    int parity;
    std::optional<std::size_t> gadget;
    int stage = 0;
  };
  std::vector<Node> nodes;
  std::map<std::pair<std::size_t, int>, std::size_t> pair_id;
  std::deque<std::size_t> queue;
  auto pair_node = [&](std::size_t q, int parity) {
    auto [it, fresh] = pair_id.emplace(std::pair{q, parity}, nodes.size());
    if (fresh) {
      nodes.push_back({q, parity, std::nullopt});
      queue.push_back(it->second);
    }
    return it->second;
  };

  CounterMachine out;
  pair_node(c.initial, 0);
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    const Node node = nodes[id];
    for (std::size_t k = 0; k < c.transitions.size(); ++k) {
      const Transition& t = c.transitions[k];
      if (t.from != node.q)
        continue;
      if (t.counter == node.parity) {
        const std::size_t to = pair_node(t.to, 1 - t.counter);
        out.transitions.push_back({id, t.counter, t.op, to});
        continue;
      }
      const int dummy = node.parity;
      const std::size_t g1 = nodes.size();
      nodes.push_back({node.q, t.counter, k, 1});
      const std::size_t g2 = nodes.size();
      nodes.push_back({node.q, dummy, k, 2});
      const std::size_t to = pair_node(t.to, t.counter);
      out.transitions.push_back({id, dummy, Op::Inc, g1});
      out.transitions.push_back({g1, t.counter, t.op, g2});
      out.transitions.push_back({g2, dummy, Op::Dec, to});
    }
  }

  std::vector<int> parities(c.states.size(), 0);
  for (const Node& x : nodes)
    if (!x.gadget)
      parities[x.q] |= 1 << x.parity;
  std::unordered_set<std::string> taken;
  out.states.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& x = nodes[i];
    if (x.gadget)
      continue;
    std::string name = c.states[x.q];
    if (parities[x.q] == 3)
      name += "." + std::to_string(x.parity);
    out.states[i] = name;
    taken.insert(name);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& x = nodes[i];
    if (!x.gadget)
      continue;
    std::string name =
        c.states[x.q] + "." + std::to_string(*x.gadget) + "." + std::to_string(x.stage);
    while (taken.contains(name))
      name += '\'';
    taken.insert(name);
    out.states[i] = name;
  }

  out.initial = 0;
  std::vector<int> side(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    side[i] = nodes[i].parity;
    if (!nodes[i].gadget && c.is_final(nodes[i].q))
      out.finals.push_back(i);
  }
  out.side = std::move(side);
  out.validate();
  return out;
}

} // namespace wreath::minsky
