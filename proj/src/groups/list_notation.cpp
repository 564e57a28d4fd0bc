#include "wreath/groups/list_notation.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <vector>

namespace wreath {

namespace {

template <class Lamp, class Format>
std::string render(const WreathElement<std::int64_t, Lamp>& x, Format&& format_value) {
  std::int64_t lo = std::min<std::int64_t>(0, x.cursor);
  std::int64_t hi = std::max<std::int64_t>(0, x.cursor);
  if (!x.lamps.empty()) {
    lo = std::min(lo, x.lamps.begin()->first);
    hi = std::max(hi, x.lamps.rbegin()->first);
  }
  std::string out = "[";
  for (std::int64_t p = lo; p <= hi; ++p) {
    if (p != lo)
      out += ", ";
    if (p == 0)
      out += 'v';
    if (p == x.cursor)
      out += '^';
    auto it = x.lamps.find(p);
    out += it == x.lamps.end() ? "0" : format_value(it->second);
  }
  out += ']';
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct Cell {
  bool incoming = false;
  bool outgoing = false;
  std::string value;
};

std::vector<Cell> split_cells(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("list notation must be enclosed in brackets");
  t = t.substr(1, t.size() - 2);
  std::vector<Cell> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = t.find(',', start);
    std::string raw = trim(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    Cell c;
    std::size_t i = 0;
    while (i < raw.size() && (raw[i] == 'v' || raw[i] == '^')) {
      if (raw[i] == 'v') {
        if (c.incoming)
          break;
        c.incoming = true;
      } else {
        if (c.outgoing)
          break;
        c.outgoing = true;
      }
      ++i;
    }
    c.value = raw.substr(i);
    if (c.value.empty())
      throw std::invalid_argument("empty cell in list notation");
    cells.push_back(c);
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return cells;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

template <class Lamp, class Ops, class Parse>
WreathElement<std::int64_t, Lamp> assemble(const std::vector<Cell>& cells, const Ops& ops,
                                           Parse&& parse_value) {
  std::int64_t origin = -1, cursor = -1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].incoming) {
      if (origin >= 0)
        throw std::invalid_argument("more than one incoming marker");
      origin = static_cast<std::int64_t>(i);
    }
    if (cells[i].outgoing) {
      if (cursor >= 0)
        throw std::invalid_argument("more than one outgoing marker");
      cursor = static_cast<std::int64_t>(i);
    }
  }
  if (origin < 0 || cursor < 0)
    throw std::invalid_argument("list notation needs both markers");
  WreathElement<std::int64_t, Lamp> x;
  x.cursor = cursor - origin;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Lamp v = parse_value(cells[i].value);
    if (!ops.is_identity(v))
      x.lamps.emplace(static_cast<std::int64_t>(i) - origin, std::move(v));
  }
  return x;
}

} // namespace

std::string render_list(const VectorLineElement& x, const SymbolTable& sigma) {
  return render(x, [&](const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0)
        continue;
      const std::int64_t k = v[i];
      if (k < 0)
        s += '-';
      else if (!s.empty())
        s += '+';
      const std::int64_t mag = k < 0 ? -k : k;
      if (mag != 1)
        s += std::to_string(mag) + "*";
      s += sigma.name(i);
    }
    return s;
  });
}

std::string render_list(const IntLineElement& x) {
  return render(x, [](std::int64_t v) { return std::to_string(v); });
}

VectorLineElement parse_list(const std::string& text, const SymbolTable& sigma) {
  IntVectorOps ops{sigma.size()};
  return assemble<std::vector<std::int64_t>>(split_cells(text), ops, [&](const std::string& s) {
    std::vector<std::int64_t> v(sigma.size(), 0);
    if (s == "0")
      return v;
    std::size_t i = 0;
    while (i < s.size()) {
      std::int64_t sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      }
      auto next = s.find_first_of("+-", i);
      std::string term = s.substr(i, next == std::string::npos ? std::string::npos : next - i);
      std::int64_t k = 1;
      if (auto star = term.find('*'); star != std::string::npos) {
        k = parse_int(term.substr(0, star));
        term = term.substr(star + 1);
      }
      v[sigma.index(term)] += sign * k;
      i = next == std::string::npos ? s.size() : next;
    }
    return v;
  });
}

IntLineElement parse_int_list(const std::string& text) {
  return assemble<std::int64_t>(split_cells(text), IntegerLampOps{}, parse_int);
}

} // namespace wreath
