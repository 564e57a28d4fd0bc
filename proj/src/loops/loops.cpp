#include "wreath/loops/loops.hpp"

#include <algorithm>

namespace wreath::loops {

namespace {

void transitive_closure(std::vector<bool>& rel, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j])
            rel[i * n + j] = true;
}

} // namespace

ReturnRelations::ReturnRelations(std::size_t num_states, int rank)
    : n_(num_states), rank_(rank),
      bits_(static_cast<std::size_t>(2 * rank + 1), std::vector<bool>(num_states * num_states)) {}

std::size_t ReturnRelations::size(NodeType t) const {
  const auto& b = bits_[t.index()];
  return static_cast<std::size_t>(std::count(b.begin(), b.end(), true));
}

ReturnRelations return_relations(const NormalizedAutomaton& a) {
  const std::size_t n = a.num_states();
  ReturnRelations z(n, a.rank);

  std::vector<bool> base(n * n);
  for (std::size_t q = 0; q < n; ++q)
    base[q * n + q] = true;
  std::vector<const Edge*> dir_edges;
  for (const Edge& e : a.edges) {
    if (e.is_lamp())
      base[e.from * n + e.to] = true;
    else
      dir_edges.push_back(&e);
  }

  const auto types = all_node_types(a.rank);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<bool>> next(types.size(), base);
    for (NodeType t : types) {
      auto& rel = next[t.index()];
      for (Direction d : children_types(t, a.rank)) {
        const auto& below = z.bits_[NodeType::of(d).index()];
        for (const Edge* down : dir_edges) {
          if (down->direction() != d)
            continue;
          for (const Edge* up : dir_edges)
            if (up->direction() == d.inverse() && below[down->to * n + up->from])
              rel[down->from * n + up->to] = true;
        }
      }
      transitive_closure(rel, n);
      if (rel != z.bits_[t.index()])
        changed = true;
    }
    if (changed) {
      z.bits_ = std::move(next);
      ++z.rounds_;
    }
  }
  return z;
}

LoopAlphabets compute_X(const NormalizedAutomaton& a, const ReturnRelations& z) {
  const auto types = all_node_types(a.rank);
  LoopAlphabets x(types.size());
  for (NodeType t : types) {
    auto& letters = x[t.index()];
    for (Direction d : children_types(t, a.rank))
      for (const Edge& down : a.edges) {
        if (!down.is_direction() || down.direction() != d)
          continue;
        for (const Edge& up : a.edges)
          if (up.is_direction() && up.direction() == d.inverse() &&
              z.contains(NodeType::of(d), down.to, up.from))
            letters.push_back({down.from, d, up.to});
      }
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  }
  return x;
}

LoopAlphabets compute_X(const NormalizedAutomaton& a) { return compute_X(a, return_relations(a)); }

} // namespace wreath::loops
