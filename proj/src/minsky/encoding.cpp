#include "wreath/minsky/encoding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wreath::minsky {

namespace {

int parity(std::int64_t p) { return static_cast<int>(((p % 2) + 2) % 2); }

bool in_window(const VectorLineElement& x, const BfsBounds& b) {
  if (x.cursor < -b.cursor_window || x.cursor > b.cursor_window)
    return false;
  if (x.lamps.empty())
    return true;
  return x.lamps.begin()->first >= -b.support_window &&
         x.lamps.rbegin()->first <= b.support_window;
}

} // namespace

bool valid_state_name(const std::string& name) {
  if (name.empty() || name == "a" || name == "c" || name == "#" || name.front() == 'v' ||
      name.front() == '^')
    return false;
  return name.find_first_of("+-*,[]^ \t") == std::string::npos;
}

std::string GeneratorSet::label(const CounterMachine& machine, std::size_t i) const {
  const Generator& g = generators.at(i);
  std::string out = "(" + std::to_string(static_cast<int>(g.family)) + ")";
  if (g.family == Family::Terminate)
    out += " " + machine.states[*g.source];
  else if (g.source) {
    const Transition& t = machine.transitions[*g.source];
    out += " " + machine.states[t.from] + "->" + machine.states[t.to];
  }
  return out;
}

GeneratorSet build_generators(const CounterMachine& machine) {
  machine.validate();
  if (!machine.alternating())
    throw std::invalid_argument("machine has no partition into Q0 and Q1");
  for (const std::string& q : machine.states)
    if (!valid_state_name(q))
      throw std::invalid_argument("state name '" + q + "' cannot be used in Sigma");
  GeneratorSet gens;
  std::vector<std::string> names = machine.states;
  std::sort(names.begin(), names.end());
  gens.num_states = names.size();
  names.push_back("c");
  names.push_back("#");
  gens.sigma = SymbolTable(std::move(names));
  gens.group = make_vector_line_group(gens.sigma.size());

  auto add = [&](Family f, std::optional<std::size_t> source, std::string word) {
    VectorLineElement e = eval_line_word(gens.group, gens.sigma, word);
    gens.generators.push_back({f, source, std::move(word), std::move(e)});
    return gens.generators.size() - 1;
  };
  for (std::size_t k = 0; k < machine.transitions.size(); ++k) {
    const Transition& t = machine.transitions[k];
    const std::string& p = machine.states[t.from];
    const std::string& q = machine.states[t.to];
    switch (t.op) {
    case Op::Zero:
      gens.by_transition.push_back(add(Family::ZeroTest, k, p + "^-1 a # a^2 # a " + q));
      break;
    case Op::Inc:
      gens.by_transition.push_back(add(Family::Increment, k, p + "^-1 a # a c a^2 " + q + " a^-2"));
      break;
    case Op::Dec:
      gens.by_transition.push_back(
          add(Family::Decrement, k, p + "^-1 a # a^3 " + q + " a^6 c^-1 a^-8"));
      break;
    }
  }
  gens.copy = add(Family::Copy, std::nullopt, "c^-1 a^8 c a^-8");
  gens.copy_last = add(Family::CopyLast, std::nullopt, "c^-1 a # a^7 c a^-6");
  gens.by_final.assign(machine.states.size(), std::nullopt);
  for (std::size_t f : machine.finals)
    if (!gens.by_final[f])
      gens.by_final[f] = add(Family::Terminate, f, machine.states[f] + "^-1 a^-1");
  gens.go_left = add(Family::GoLeft, std::nullopt, "#^-1 a^-2");
  return gens;
}

VectorLineElement initial_element(const GeneratorSet& gens, const CounterMachine& machine,
                                  std::uint64_t m, std::uint64_t n) {
  return eval_line_word(gens.group, gens.sigma,
                        "a " + machine.states[machine.initial] + " a^2 c^" + std::to_string(m) +
                            " a^4 c^" + std::to_string(n) + " a^-6");
}

VectorLineElement evaluate(const GeneratorSet& gens, const std::vector<std::size_t>& word) {
  VectorLineElement acc = gens.group.identity();
  for (std::size_t i : word)
    acc = gens.group.mul(acc, gens.generators.at(i).element);
  return acc;
}

std::optional<std::string> shape_violation(const GeneratorSet& gens, const VectorLineElement& x) {
  for (const auto& [pos, v] : x.lamps) {
    const int b = parity(pos);
    for (std::size_t q = 0; q < gens.num_states; ++q)
      if (v[q] != 0 && b == 0)
        return "state " + gens.sigma.name(q) + " at even position " + std::to_string(pos);
    if (v[gens.c_index()] != 0 && b == 0)
      return "c at even position " + std::to_string(pos);
    if (v[gens.hash_index()] != 0 && b == 1)
      return "# at odd position " + std::to_string(pos);
  }
  return std::nullopt;
}

Translation translate(const CounterMachine& machine, const GeneratorSet& gens,
                      const Computation& run) {
  if (!machine.alternating())
    throw std::invalid_argument("machine has no partition into Q0 and Q1");
  if (run.configs.size() != run.transitions.size() + 1)
    throw std::invalid_argument("computation has mismatched configs and transitions");
  const MachineConfig& first = run.configs.front();
  const MachineConfig& last = run.configs.back();
  if (first.state != machine.initial)
    throw std::invalid_argument("computation does not start in the initial state");
  if (!machine.is_final(last.state) || last.c0 != 0 || last.c1 != 0)
    throw std::invalid_argument("computation does not end in a final state with zero counters");

  Translation out;
  VectorLineElement x = initial_element(gens, machine, first.c0, first.c1);
  auto apply = [&](std::size_t g) {
    out.word.push_back(g);
    x = gens.group.mul(x, gens.generators[g].element);
    if (auto bad = shape_violation(gens, x))
      throw std::logic_error("shape constraint violated after " + gens.label(machine, g) + ": " +
                             *bad);
  };
  if (auto bad = shape_violation(gens, x))
    throw std::logic_error("initial element violates the shape constraints: " + *bad);

  for (std::size_t i = 0; i < run.transitions.size(); ++i) {
    const std::size_t t = run.transitions[i];
    if (t >= machine.transitions.size())
      throw std::invalid_argument("transition index out of range");
    const auto next = fire(machine, run.configs[i], t);
    if (!next || *next != run.configs[i + 1])
      throw std::invalid_argument("step " + std::to_string(i) + " is not a machine step");
    const Transition& tr = machine.transitions[t];
    const std::uint64_t a = run.configs[i].counter(tr.counter);
    apply(gens.by_transition[t]);
    if (tr.op == Op::Zero)
      continue;
    const std::uint64_t copies = tr.op == Op::Inc ? a : a - 1;
    for (std::uint64_t k = 0; k < copies; ++k)
      apply(gens.copy);
    apply(gens.copy_last);
  }
  apply(*gens.by_final.at(last.state));
  while (x.cursor > 0) {
    apply(gens.go_left);
    ++out.go_left_count;
  }
  if (out.go_left_count != 2 * run.steps())
    throw std::logic_error("expected " + std::to_string(2 * run.steps()) +
                           " go-left generators, used " + std::to_string(out.go_left_count));
  if (!gens.group.is_identity(x))
    throw std::logic_error("translated word does not reach the identity");
  out.product = std::move(x);
  return out;
}

bool verify_translation(const GeneratorSet& gens, const CounterMachine& machine, std::uint64_t m,
                        std::uint64_t n, const std::vector<std::size_t>& word) {
  for (std::size_t i : word)
    if (i >= gens.generators.size())
      return false;
  return gens.group.is_identity(
      gens.group.mul(initial_element(gens, machine, m, n), evaluate(gens, word)));
}

std::int64_t conservation_sigma_q(const GeneratorSet& gens, const VectorLineElement& x, int b) {
  std::int64_t sum = 0;
  for (const auto& [pos, v] : x.lamps)
    if (parity(pos) == b)
      for (std::size_t q = 0; q < gens.num_states; ++q)
        sum += v[q];
  return sum;
}

IntLineElement embed_zz(const VectorLineElement& x, std::size_t m) {
  IntLineElement out;
  const auto width = static_cast<std::int64_t>(m);
  for (const auto& [pos, v] : x.lamps)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0)
        out.lamps.emplace(pos * width + static_cast<std::int64_t>(j), v[j]);
  out.cursor = x.cursor * width;
  return out;
}

BfsResult bfs_membership(const VectorLineElement& target, const GeneratorSet& gens,
                         const BfsBounds& bounds, kernels::Mode mode) {
  struct Node {
    VectorLineElement x;
    std::size_t parent;
    std::size_t gen;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Node> nodes{{gens.group.identity(), kNone, kNone}};
  std::set<VectorLineElement> seen{nodes[0].x};
  BfsResult result;
  auto finish = [&](std::size_t node) {
    result.found = true;
    for (std::size_t i = node; nodes[i].parent != kNone; i = nodes[i].parent)
      result.word.push_back(nodes[i].gen);
    std::reverse(result.word.begin(), result.word.end());
    result.explored = nodes.size();
    return result;
  };
  if (gens.group.is_identity(target))
    return finish(0);

  // The frontier is expanded in chunks so the candidate buffer stays small.
  constexpr std::size_t kChunk = 4096;
  const std::size_t fanout = gens.generators.size();
  std::vector<std::size_t> frontier{0};
  std::vector<std::optional<VectorLineElement>> expanded;
  for (std::size_t length = 1; length <= bounds.max_length && !frontier.empty(); ++length) {
    std::vector<std::size_t> next;
    for (std::size_t begin = 0; begin < frontier.size(); begin += kChunk) {
      const auto chunk = std::span<const std::size_t>(frontier).subspan(
          begin, std::min(kChunk, frontier.size() - begin));
      kernels::expand(mode, chunk, fanout, expanded,
                      [&](std::size_t node, std::size_t j) -> std::optional<VectorLineElement> {
                        VectorLineElement y =
                            gens.group.mul(nodes[node].x, gens.generators[j].element);
                        if (!in_window(y, bounds))
                          return std::nullopt;
                        return y;
                      });
      for (std::size_t k = 0; k < expanded.size(); ++k) {
        if (!expanded[k] || !seen.insert(*expanded[k]).second)
          continue;
        nodes.push_back({std::move(*expanded[k]), chunk[k / fanout], k % fanout});
        if (nodes.back().x == target)
          return finish(nodes.size() - 1);
        if (nodes.size() >= bounds.max_states) {
          result.explored = nodes.size();
          return result;
        }
        next.push_back(nodes.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  result.explored = nodes.size();
  return result;
}

} // namespace wreath::minsky
