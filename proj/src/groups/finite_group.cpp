#include "wreath/groups/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

namespace wreath {

namespace {

[[noreturn]] void fail(const std::string& what) { throw InvalidGroup(what); }

} // namespace

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<std::string> names,
                                    std::vector<std::vector<Element>> table,
                                    std::size_t full_check_order) {
  const std::size_t n = names.size();
  if (n == 0)
    fail("group must have at least one element");
  if (std::set<std::string>(names.begin(), names.end()).size() != n)
    fail("element names must be distinct");
  if (table.size() != n)
    fail("table must have " + std::to_string(n) + " rows");

  FiniteGroup g;
  g.name_ = std::move(name);
  g.names_ = std::move(names);
  g.table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      fail("row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    std::vector<bool> seen(n, false);
    for (Element v : table[i]) {
      if (v >= n)
        fail("table entry out of range in row " + std::to_string(i));
      if (seen[v])
        fail("row " + std::to_string(i) + " is not a permutation");
      seen[v] = true;
      g.table_.push_back(v);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]])
        fail("column " + std::to_string(j) + " is not a permutation");
      seen[table[i][j]] = true;
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      fail("first element is not an identity");
  }

  g.inverses_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    // Latin rows guarantee exactly one right inverse.
    for (Element b = 0; b < n; ++b) {
      if (g.mul(a, b) == 0) {
        g.inverses_[a] = b;
        break;
      }
    }
    if (g.mul(g.inverses_[a], a) != 0)
      fail("element " + g.names_[a] + " has no two-sided inverse");
  }

  auto check = [&](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      fail("table is not associative at (" + g.names_[a] + ", " + g.names_[b] + ", " +
           g.names_[c] + ")");
  };
  if (n <= full_check_order) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (std::size_t k = 0; k < kSpotCheckTriples; ++k)
      check(pick(rng), pick(rng), pick(rng));
  }

  for (Element a = 0; a < n && g.abelian_; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        g.abelian_ = false;
        break;
      }
  g.exponent_ = 1;
  for (Element a = 0; a < n; ++a)
    g.exponent_ = std::lcm(g.exponent_, g.element_order(a));
  return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table("1", {"1"}, {{0}}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0)
    fail("cyclic group of order 0");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(std::to_string(i));
  if (n == 2)
    names[1] = "t";
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      table[i][j] = static_cast<Element>((i + j) % n);
  return from_table("Z" + std::to_string(n), std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Permutations of {0,1,2} in one-line notation; composition (p*q)(i) = p(q(i)).
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const std::vector<std::string> names = {"e", "s1", "s2", "s3", "r", "rr"};
  std::vector<std::vector<Element>> table(6, std::vector<Element>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k)
        c[k] = perms[i][perms[j][k]];
      table[i][j] = static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return from_table("S3", names, std::move(table));
}

std::optional<FiniteGroup::Element> FiniteGroup::find(const std::string& element_name) const {
  auto it = std::find(names_.begin(), names_.end(), element_name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a))
    ++k;
  return k;
}

} // namespace wreath
