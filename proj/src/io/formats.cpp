#include "wreath/io/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "wreath/groups/list_notation.hpp"

namespace wreath::io {

using decision::StateId;

namespace {

struct Line {
  std::size_t number;
  std::string keyword;
  std::vector<std::string> args;
  std::string rest;
};

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string text;
  for (std::size_t n = 1; std::getline(in, text); ++n) {
    if (!text.empty() && text.back() == '\r')
      text.pop_back();
    std::istringstream words(text);
    Line line{n, {}, {}, {}};
    if (!(words >> line.keyword) || line.keyword.front() == '#')
      continue;
    std::getline(words, line.rest);
    line.rest.erase(0, line.rest.find_first_not_of(" \t"));
    std::istringstream args(line.rest);
    for (std::string a; args >> a;)
      line.args.push_back(a);
    out.push_back(std::move(line));
  }
  return out;
}

std::size_t to_count(const Line& line, const std::string& text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(line.number, "expected a nonnegative integer, got '" + text + "'");
  return v;
}

void expect_args(const Line& line, std::size_t n) {
  if (line.args.size() != n)
    throw ParseError(line.number, "'" + line.keyword + "' expects " + std::to_string(n) +
                                      " argument" + (n == 1 ? "" : "s"));
}

template <class Fn>
auto at_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i)
    s += (i ? " " : "") + items[i];
  return s;
}

class Names {
public:
  explicit Names(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      ids_.emplace(names[i], i);
  }
  std::size_t at(const Line& line, const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end())
      throw ParseError(line.number, "unknown state '" + name + "'");
    return it->second;
  }

private:
  std::map<std::string, std::size_t> ids_;
};

void require_header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty() || lines.front().keyword != keyword)
    throw ParseError(lines.empty() ? 1 : lines.front().number,
                     "file must start with '" + keyword + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

// ---- groups -------------------------------------------------------------------

FiniteGroup parse_group(std::istream& in) {
  const auto lines = read_lines(in);
  require_header(lines, "group");
  if (lines.size() < 3 || lines[1].keyword != "order" || lines[2].keyword != "elems")
    throw ParseError(lines.size() > 1 ? lines[1].number : lines[0].number,
                     "expected 'order' then 'elems'");
  expect_args(lines[0], 1);
  expect_args(lines[1], 1);
  const std::size_t n = to_count(lines[1], lines[1].args[0]);
  expect_args(lines[2], n);
  const std::vector<std::string> names = lines[2].args;
  std::map<std::string, FiniteGroup::Element> ids;
  for (std::size_t i = 0; i < n; ++i)
    ids.emplace(names[i], static_cast<FiniteGroup::Element>(i));
  if (lines.size() != 3 + n)
    throw ParseError(lines.back().number, "expected " + std::to_string(n) + " table rows");
  std::vector<std::vector<FiniteGroup::Element>> table;
  for (std::size_t r = 0; r < n; ++r) {
    const Line& row = lines[3 + r];
    std::vector<std::string> cells{row.keyword};
    cells.insert(cells.end(), row.args.begin(), row.args.end());
    if (cells.size() != n)
      throw ParseError(row.number, "table row must have " + std::to_string(n) + " entries");
    auto& out = table.emplace_back();
    for (const auto& cell : cells) {
      auto it = ids.find(cell);
      if (it == ids.end())
        throw ParseError(row.number, "unknown element '" + cell + "'");
      out.push_back(it->second);
    }
  }
  return at_line(lines[2].number, [&] {
    return FiniteGroup::from_table(lines[0].args[0], names, std::move(table));
  });
}

std::string write_group(const FiniteGroup& h) {
  std::ostringstream out;
  out << "group " << h.name() << "\norder " << h.order() << "\nelems "
      << join(h.element_names()) << "\n";
  for (FiniteGroup::Element a = 0; a < h.order(); ++a) {
    std::vector<std::string> row;
    for (FiniteGroup::Element b = 0; b < h.order(); ++b)
      row.push_back(h.element_name(h.mul(a, b)));
    out << join(row) << "\n";
  }
  return out.str();
}

FiniteGroup load_group(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_group(in);
}

// ---- automata -----------------------------------------------------------------

AutomatonFile parse_automaton(std::istream& in,
                              const std::function<FiniteGroup(const std::string&)>& load_group_fn) {
  const auto lines = read_lines(in);
  require_header(lines, "ratset");
  AutomatonFile file;
  auto& a = file.automaton;
  bool have_rank = false;
  bool have_init = false;
  std::optional<Names> names;
  auto states = [&](const Line& line) -> const Names& {
    if (!names)
      throw ParseError(line.number, "'states' must come before '" + line.keyword + "'");
    return *names;
  };
  auto group = [&](const Line& line) -> const FiniteGroup& {
    if (!a.group || !have_rank)
      throw ParseError(line.number, "'rank' and 'group' must come before '" + line.keyword + "'");
    return *a.group;
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& k = line.keyword;
    if (k == "rank") {
      expect_args(line, 1);
      a.rank = static_cast<int>(to_count(line, line.args[0]));
      if (a.rank < 1)
        throw ParseError(line.number, "rank must be positive");
      have_rank = true;
    } else if (k == "group") {
      expect_args(line, 1);
      file.group_path = line.args[0];
      a.group = at_line(line.number, [&] {
        return std::make_shared<const FiniteGroup>(load_group_fn(file.group_path));
      });
    } else if (k == "states") {
      if (names)
        throw ParseError(line.number, "duplicate 'states'");
      if (line.args.empty())
        throw ParseError(line.number, "'states' needs at least one name");
      if (std::set<std::string>(line.args.begin(), line.args.end()).size() != line.args.size())
        throw ParseError(line.number, "duplicate state names");
      a.state_names = line.args;
      names.emplace(line.args);
    } else if (k == "init") {
      expect_args(line, 1);
      a.initial = static_cast<StateId>(states(line).at(line, line.args[0]));
      have_init = true;
    } else if (k == "final") {
      for (const auto& f : line.args)
        a.finals.push_back(static_cast<StateId>(states(line).at(line, f)));
    } else if (k == "edge") {
      if (line.args.size() < 2)
        throw ParseError(line.number, "'edge' needs a source and a target state");
      decision::RawEdge e;
      e.from = static_cast<StateId>(states(line).at(line, line.args[0]));
      e.to = static_cast<StateId>(states(line).at(line, line.args[1]));
      const FiniteGroup& h = group(line);
      for (std::size_t j = 2; j < line.args.size(); ++j)
        e.label.push_back(at_line(line.number, [&] { return parse_token(line.args[j], h, a.rank); }));
      a.edges.push_back(std::move(e));
    } else if (k == "target") {
      const FiniteGroup& h = group(line);
      a.target = at_line(line.number, [&] { return parse_tokens(line.rest, h, a.rank); });
    } else {
      throw ParseError(line.number, "unknown keyword '" + k + "'");
    }
  }
  const std::size_t last = lines.back().number;
  if (!a.group)
    throw ParseError(last, "missing 'group'");
  if (!have_rank)
    throw ParseError(last, "missing 'rank'");
  if (!names)
    throw ParseError(last, "missing 'states'");
  if (!have_init)
    throw ParseError(last, "missing 'init'");
  return file;
}

std::string write_automaton(const AutomatonFile& file) {
  const auto& a = file.automaton;
  std::ostringstream out;
  out << "ratset\nrank " << a.rank << "\ngroup " << file.group_path << "\nstates "
      << join(a.state_names) << "\ninit " << a.state_names.at(a.initial) << "\nfinal";
  for (StateId f : a.finals)
    out << ' ' << a.state_names.at(f);
  out << "\n";
  for (const auto& e : a.edges) {
    out << "edge " << a.state_names.at(e.from) << ' ' << a.state_names.at(e.to);
    if (!e.label.empty())
      out << ' ' << format_tokens(e.label, *a.group);
    out << "\n";
  }
  if (a.target) {
    out << "target";
    if (!a.target->empty())
      out << ' ' << format_tokens(*a.target, *a.group);
    out << "\n";
  }
  return out.str();
}

AutomatonFile load_automaton(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  const auto folder = path.parent_path();
  return parse_automaton(in, [&](const std::string& group_path) {
    const std::filesystem::path p(group_path);
    return load_group(p.is_absolute() ? p : folder / p);
  });
}

// ---- counter machines ---------------------------------------------------------

minsky::CounterMachine parse_machine(std::istream& in) {
  const auto lines = read_lines(in);
  require_header(lines, "machine");
  minsky::CounterMachine c;
  std::optional<Names> names;
  bool have_init = false;
  auto states = [&](const Line& line) -> const Names& {
    if (!names)
      throw ParseError(line.number, "'states' must come before '" + line.keyword + "'");
    return *names;
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& k = line.keyword;
    if (k == "states") {
      if (names)
        throw ParseError(line.number, "duplicate 'states'");
      if (line.args.empty())
        throw ParseError(line.number, "'states' needs at least one name");
      for (const auto& s : line.args)
        if (!minsky::valid_state_name(s))
          throw ParseError(line.number, "invalid state name '" + s + "'");
      if (std::set<std::string>(line.args.begin(), line.args.end()).size() != line.args.size())
        throw ParseError(line.number, "duplicate state names");
      c.states = line.args;
      names.emplace(line.args);
    } else if (k == "init") {
      expect_args(line, 1);
      c.initial = states(line).at(line, line.args[0]);
      have_init = true;
    } else if (k == "final") {
      for (const auto& f : line.args)
        c.finals.push_back(states(line).at(line, f));
    } else if (k == "partition") {
      states(line);
      std::vector<int> side(c.states.size(), -1);
      int block = 0;
      for (const auto& s : line.args) {
        if (s == "|") {
          if (++block > 1)
            throw ParseError(line.number, "partition has more than two blocks");
          continue;
        }
        side[states(line).at(line, s)] = block;
      }
      if (block != 1)
        throw ParseError(line.number, "partition needs two blocks separated by '|'");
      if (std::find(side.begin(), side.end(), -1) != side.end())
        throw ParseError(line.number, "partition does not cover every state");
      c.side = std::move(side);
    } else if (k == "trans") {
      expect_args(line, 4);
      minsky::Transition t;
      t.from = states(line).at(line, line.args[0]);
      if (line.args[1] != "0" && line.args[1] != "1")
        throw ParseError(line.number, "counter must be 0 or 1");
      t.counter = line.args[1] == "0" ? 0 : 1;
      const std::string& op = line.args[2];
      if (op == "+1")
        t.op = minsky::Op::Inc;
      else if (op == "-1")
        t.op = minsky::Op::Dec;
      else if (op == "=0")
        t.op = minsky::Op::Zero;
      else
        throw ParseError(line.number, "operation must be +1, -1 or =0");
      t.to = states(line).at(line, line.args[3]);
      c.transitions.push_back(t);
    } else {
      throw ParseError(line.number, "unknown keyword '" + k + "'");
    }
  }
  const std::size_t last = lines.back().number;
  if (!names)
    throw ParseError(last, "missing 'states'");
  if (!have_init)
    throw ParseError(last, "missing 'init'");
  at_line(last, [&] {
    c.validate();
    return 0;
  });
  return c;
}

std::string write_machine(const minsky::CounterMachine& c) {
  std::ostringstream out;
  out << "machine\nstates " << join(c.states) << "\ninit " << c.states.at(c.initial) << "\nfinal";
  for (std::size_t f : c.finals)
    out << ' ' << c.states.at(f);
  out << "\n";
  if (c.side) {
    out << "partition";
    for (int block = 0; block < 2; ++block) {
      if (block)
        out << " |";
      for (std::size_t q = 0; q < c.states.size(); ++q)
        if ((*c.side)[q] == block)
          out << ' ' << c.states[q];
    }
    out << "\n";
  }
  for (const auto& t : c.transitions)
    out << "trans " << c.states.at(t.from) << ' ' << t.counter << ' ' << minsky::to_string(t.op)
        << ' ' << c.states.at(t.to) << "\n";
  return out.str();
}

minsky::CounterMachine load_machine(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_machine(in);
}

// ---- generators ---------------------------------------------------------------

GeneratorFile generator_file(const minsky::GeneratorSet& gens, bool with_embedding) {
  GeneratorFile file;
  file.sigma = gens.sigma;
  for (const auto& g : gens.generators) {
    file.families.push_back(static_cast<int>(g.family));
    file.elements.push_back(g.element);
    if (with_embedding)
      file.embedded.push_back(minsky::embed_zz(g.element, gens.sigma.size()));
  }
  return file;
}

std::string write_generators(const GeneratorFile& file, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "generators\nsigma " << join(file.sigma.names()) << "\n";
  for (std::size_t i = 0; i < file.elements.size(); ++i) {
    if (i < labels.size())
      out << "# " << i << ' ' << labels[i] << "\n";
    out << "gen " << file.families[i] << ' ' << render_list(file.elements[i], file.sigma) << "\n";
    if (i < file.embedded.size())
      out << "zz " << render_list(file.embedded[i]) << "\n";
  }
  return out.str();
}

GeneratorFile parse_generators(std::istream& in) {
  const auto lines = read_lines(in);
  require_header(lines, "generators");
  GeneratorFile file;
  bool have_sigma = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.keyword == "sigma") {
      file.sigma = at_line(line.number, [&] { return SymbolTable(line.args); });
      have_sigma = true;
    } else if (line.keyword == "gen") {
      if (!have_sigma)
        throw ParseError(line.number, "'sigma' must come before 'gen'");
      if (line.args.empty())
        throw ParseError(line.number, "'gen' needs a family and an element");
      const std::size_t family = to_count(line, line.args[0]);
      if (family < 1 || family > 7)
        throw ParseError(line.number, "family must be between 1 and 7");
      file.families.push_back(static_cast<int>(family));
      const std::string list = line.rest.substr(line.args[0].size());
      file.elements.push_back(at_line(line.number, [&] { return parse_list(list, file.sigma); }));
    } else if (line.keyword == "zz") {
      if (file.embedded.size() + 1 != file.elements.size())
        throw ParseError(line.number, "'zz' must follow its 'gen' line");
      file.embedded.push_back(at_line(line.number, [&] { return parse_int_list(line.rest); }));
    } else {
      throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
    }
  }
  if (!file.embedded.empty() && file.embedded.size() != file.elements.size())
    throw ParseError(lines.back().number, "'zz' lines must accompany every generator or none");
  return file;
}

} // namespace wreath::io
