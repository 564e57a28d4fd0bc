#ifndef WREATH_IO_FORMATS_HPP
#define WREATH_IO_FORMATS_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/decision/decision.hpp"
#include "wreath/groups/finite_group.hpp"
#include "wreath/minsky/encoding.hpp"
#include "wreath/minsky/machine.hpp"

// Line-oriented text formats. Blank lines and lines whose first token starts
// with `#` are ignored. Every parse error carries the 1-based line number.

namespace wreath::io {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// group <name> / order <n> / elems <names> / n table rows.
FiniteGroup parse_group(std::istream& in);
std::string write_group(const FiniteGroup& h);
FiniteGroup load_group(const std::filesystem::path& path);

struct AutomatonFile {
  /// As written after `group`; resolved against the automaton file's folder.
  std::string group_path;
  decision::RawAutomaton automaton;
};

/// ratset / rank <r> / group <path> / states / init / final / edge ... /
/// optional target. load_group_fn resolves the group path.
AutomatonFile parse_automaton(std::istream& in,
                              const std::function<FiniteGroup(const std::string&)>& load_group_fn);
std::string write_automaton(const AutomatonFile& file);
AutomatonFile load_automaton(const std::filesystem::path& path);

/// machine / states / init / final / optional partition A | B / trans lines.
minsky::CounterMachine parse_machine(std::istream& in);
std::string write_machine(const minsky::CounterMachine& c);
minsky::CounterMachine load_machine(const std::filesystem::path& path);

/// Generators in list notation, as printed by `minsky encode`.
struct GeneratorFile {
  SymbolTable sigma;
  std::vector<int> families;
  std::vector<VectorLineElement> elements;
  /// Z wr Z images, present when written with them.
  std::vector<IntLineElement> embedded;

  bool operator==(const GeneratorFile&) const = default;
};

GeneratorFile generator_file(const minsky::GeneratorSet& gens, bool with_embedding);
/// `labels`, when given, adds a comment line per generator.
std::string write_generators(const GeneratorFile& file,
                             const std::vector<std::string>& labels = {});
GeneratorFile parse_generators(std::istream& in);

} // namespace wreath::io

#endif
