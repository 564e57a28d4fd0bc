#ifndef WREATH_MINSKY_ENCODING_HPP
#define WREATH_MINSKY_ENCODING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreath/groups/tokens.hpp"
#include "wreath/groups/wreath.hpp"
#include "wreath/kernels/kernels.hpp"
#include "wreath/minsky/machine.hpp"

namespace wreath::minsky {

/// The seven generator families, numbered as in the construction.
enum class Family {
  ZeroTest = 1,
  Increment = 2,
  Decrement = 3,
  Copy = 4,
  CopyLast = 5,
  Terminate = 6,
  GoLeft = 7,
};

struct Generator {
  Family family = Family::Copy;
  /// Machine transition for families 1-3, final state for family 6.
  std::optional<std::size_t> source;
  /// Defining word over Sigma and the cursor letter `a`.
  std::string word;
  VectorLineElement element;
};

/// Generators of the submonoid M of Z^Sigma wr Z. Sigma lists the machine
/// states in lexicographic order, then `c`, then `#`.
struct GeneratorSet {
  SymbolTable sigma;
  VectorLineGroup group{IntegerOps{}, IntVectorOps{}};
  std::size_t num_states = 0;
  std::vector<Generator> generators;
  /// Generator index per machine transition and per final state.
  std::vector<std::size_t> by_transition;
  std::vector<std::optional<std::size_t>> by_final;
  std::size_t copy = 0;
  std::size_t copy_last = 0;
  std::size_t go_left = 0;

  std::size_t c_index() const { return num_states; }
  std::size_t hash_index() const { return num_states + 1; }
  /// Short description such as `(1) q0->q1` or `(4)`.
  std::string label(const CounterMachine& machine, std::size_t i) const;
};

/// A state name must survive list notation and word evaluation: not `a`, `c`
/// or `#`, not starting with `v` or `^`, free of `+-*,[]^` and whitespace.
bool valid_state_name(const std::string& name);

/// Throws std::invalid_argument unless the machine carries a partition.
GeneratorSet build_generators(const CounterMachine& machine);

/// a q0 a^2 c^m a^4 c^n a^-6.
VectorLineElement initial_element(const GeneratorSet& gens, const CounterMachine& machine,
                                  std::uint64_t m, std::uint64_t n);

VectorLineElement evaluate(const GeneratorSet& gens, const std::vector<std::size_t>& word);

struct Translation {
  std::vector<std::size_t> word;
  VectorLineElement product;
  std::size_t go_left_count = 0;
};

/// Generator word Y with I(m,n) Y = 1 built from a halting computation.
/// Every intermediate product I(m,n) Y_j is checked against the shape
/// constraints (std::logic_error on violation). Throws std::invalid_argument
/// when the computation is not a run of the machine ending in (final, 0, 0).
Translation translate(const CounterMachine& machine, const GeneratorSet& gens,
                      const Computation& run);

bool verify_translation(const GeneratorSet& gens, const CounterMachine& machine, std::uint64_t m,
                        std::uint64_t n, const std::vector<std::size_t>& word);

/// Empty when x has no state lamp at an even position, no c lamp at an even
/// position and no # lamp at an odd position; otherwise a description.
std::optional<std::string> shape_violation(const GeneratorSet& gens, const VectorLineElement& x);

/// Sum of all state-lamp coefficients at positions of parity b.
std::int64_t conservation_sigma_q(const GeneratorSet& gens, const VectorLineElement& x, int b);

/// Z^m wr Z into Z wr Z: coefficient of sigma_j at p goes to position p*m + j,
/// the cursor z to m*z.
IntLineElement embed_zz(const VectorLineElement& x, std::size_t m);

struct BfsBounds {
  std::size_t max_length = 8;
  /// Cursor and lamp positions must stay within [-window, window].
  std::int64_t cursor_window = 16;
  std::int64_t support_window = 16;
  std::size_t max_states = 200'000;
};

struct BfsResult {
  bool found = false;
  std::vector<std::size_t> word;
  std::size_t explored = 0;
};

/// Breadth-first search over products of generators, pruning elements
/// outside the windows. found means the target is a product of at most
/// max_length generators; not found proves nothing beyond the bounds.
BfsResult bfs_membership(const VectorLineElement& target, const GeneratorSet& gens,
                         const BfsBounds& bounds, kernels::Mode mode = kernels::Mode::Parallel);

} // namespace wreath::minsky

#endif
