#ifndef WREATH_GROUPS_FINITE_GROUP_HPP
#define WREATH_GROUPS_FINITE_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

class InvalidGroup : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A finite group given by its multiplication table. Element 0 is the identity.
class FiniteGroup {
public:
  using Element = std::uint32_t;

  /// Tables up to this order are checked for associativity exhaustively;
  /// larger ones are spot-checked with random triples.
  static constexpr std::size_t kFullCheckOrder = 64;
  static constexpr std::size_t kSpotCheckTriples = 10000;

  /// Validates the table (closure, identity, inverses, associativity) and
  /// throws InvalidGroup on the first violation.
  static FiniteGroup from_table(std::string name, std::vector<std::string> names,
                                std::vector<std::vector<Element>> table,
                                std::size_t full_check_order = kFullCheckOrder);

  static FiniteGroup trivial();
  /// Z_n with elements named 0..n-1, except that Z_2 names its generator `t`
  /// so lamplighter instances read naturally.
  static FiniteGroup cyclic(std::size_t n);
  /// S_3, the smallest non-abelian group.
  static FiniteGroup symmetric3();

  const std::string& name() const { return name_; }
  std::size_t order() const { return names_.size(); }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order() + b]; }
  Element inv(Element a) const { return inverses_[a]; }
  bool is_identity(Element a) const { return a == 0; }

  const std::string& element_name(Element a) const { return names_.at(a); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Element> find(const std::string& element_name) const;

  bool is_abelian() const { return abelian_; }
  /// Least common multiple of element orders.
  std::size_t exponent() const { return exponent_; }
  std::size_t element_order(Element a) const;

  bool operator==(const FiniteGroup& other) const {
    return names_ == other.names_ && table_ == other.table_;
  }

private:
  FiniteGroup() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  bool abelian_ = true;
  std::size_t exponent_ = 1;
};

} // namespace wreath

#endif
