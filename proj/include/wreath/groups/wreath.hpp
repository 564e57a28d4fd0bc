#ifndef WREATH_GROUPS_WREATH_HPP
#define WREATH_GROUPS_WREATH_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wreath/groups/finite_group.hpp"
#include "wreath/groups/free_group.hpp"

namespace wreath {

/// A pair (lamp map, cursor). Lamps equal to the lamp identity are never
/// stored, so structural equality is group equality.
template <class Position, class Lamp>
struct WreathElement {
  std::map<Position, Lamp> lamps;
  Position cursor{};

  bool operator==(const WreathElement&) const = default;
  auto operator<=>(const WreathElement&) const = default;
};

/// H wr G for a lamp group H and a cursor group G, each described by an ops
/// object providing identity / mul / inv (and is_identity for lamps).
template <class PositionOps, class LampOps>
class WreathGroup {
public:
  using Position = typename PositionOps::Value;
  using Lamp = typename LampOps::Value;
  using Element = WreathElement<Position, Lamp>;

  WreathGroup(PositionOps positions, LampOps lamps)
      : positions_(std::move(positions)), lamps_(std::move(lamps)) {}

  const PositionOps& positions() const { return positions_; }
  const LampOps& lamp_ops() const { return lamps_; }

  Element identity() const { return Element{{}, positions_.identity()}; }

  /// Pure cursor move.
  Element move(const Position& g) const { return Element{{}, g}; }

  /// Lamp h at the origin, cursor unmoved.
  Element lamp(const Lamp& h) const {
    Element e = identity();
    if (!lamps_.is_identity(h))
      e.lamps.emplace(positions_.identity(), h);
    return e;
  }

  /// (f1, g1)(f2, g2) = (f, g1 g2) with f(a) = f1(a) f2(g1^-1 a).
  Element mul(const Element& x, const Element& y) const {
    Element out = x;
    for (const auto& [pos, h] : y.lamps) {
      Position at = positions_.mul(x.cursor, pos);
      auto it = out.lamps.find(at);
      if (it == out.lamps.end()) {
        out.lamps.emplace(std::move(at), h);
      } else {
        it->second = lamps_.mul(it->second, h);
        if (lamps_.is_identity(it->second))
          out.lamps.erase(it);
      }
    }
    out.cursor = positions_.mul(x.cursor, y.cursor);
    return out;
  }

  /// (f, g)^-1 = (f', g^-1) with f'(a) = f(g a)^-1.
  Element inv(const Element& x) const {
    Element out;
    const Position back = positions_.inv(x.cursor);
    for (const auto& [pos, h] : x.lamps)
      out.lamps.emplace(positions_.mul(back, pos), lamps_.inv(h));
    out.cursor = back;
    return out;
  }

  Element product(std::span<const Element> factors) const {
    Element acc = identity();
    for (const Element& f : factors)
      acc = mul(acc, f);
    return acc;
  }

  bool is_identity(const Element& x) const {
    return x.lamps.empty() && x.cursor == positions_.identity();
  }

private:
  PositionOps positions_;
  LampOps lamps_;
};

// ---- position groups -------------------------------------------------------

struct FreeGroupOps {
  using Value = FreeWord;
  int rank = 1;
  FreeWord identity() const { return {}; }
  FreeWord mul(const FreeWord& a, const FreeWord& b) const { return a * b; }
  FreeWord inv(const FreeWord& a) const { return a.inverse(); }
};

struct IntegerOps {
  using Value = std::int64_t;
  std::int64_t identity() const { return 0; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return a + b; }
  std::int64_t inv(std::int64_t a) const { return -a; }
};

// ---- lamp groups -----------------------------------------------------------

struct FiniteLampOps {
  using Value = FiniteGroup::Element;
  std::shared_ptr<const FiniteGroup> group;
  Value identity() const { return group->identity(); }
  Value mul(Value a, Value b) const { return group->mul(a, b); }
  Value inv(Value a) const { return group->inv(a); }
  bool is_identity(Value a) const { return group->is_identity(a); }
};

/// Free abelian group Z^dim, written additively.
struct IntVectorOps {
  using Value = std::vector<std::int64_t>;
  std::size_t dim = 0;
  Value identity() const { return Value(dim, 0); }
  Value mul(const Value& a, const Value& b) const {
    Value c = a;
    for (std::size_t i = 0; i < dim; ++i)
      c[i] += b[i];
    return c;
  }
  Value inv(const Value& a) const {
    Value c = a;
    for (auto& v : c)
      v = -v;
    return c;
  }
  bool is_identity(const Value& a) const {
    for (auto v : a)
      if (v != 0)
        return false;
    return true;
  }
  Value unit(std::size_t i, std::int64_t k = 1) const {
    Value v(dim, 0);
    v[i] = k;
    return v;
  }
};

struct IntegerLampOps {
  using Value = std::int64_t;
  Value identity() const { return 0; }
  Value mul(Value a, Value b) const { return a + b; }
  Value inv(Value a) const { return -a; }
  bool is_identity(Value a) const { return a == 0; }
};

/// H wr F_r for finite H.
using LampFreeGroup = WreathGroup<FreeGroupOps, FiniteLampOps>;
using LampFreeElement = LampFreeGroup::Element;
/// Z^Sigma wr Z.
using VectorLineGroup = WreathGroup<IntegerOps, IntVectorOps>;
using VectorLineElement = VectorLineGroup::Element;
/// Z wr Z.
using IntLineGroup = WreathGroup<IntegerOps, IntegerLampOps>;
using IntLineElement = IntLineGroup::Element;

inline LampFreeGroup make_lamp_free_group(std::shared_ptr<const FiniteGroup> h, int rank) {
  return LampFreeGroup(FreeGroupOps{rank}, FiniteLampOps{std::move(h)});
}
inline VectorLineGroup make_vector_line_group(std::size_t dim) {
  return VectorLineGroup(IntegerOps{}, IntVectorOps{dim});
}
inline IntLineGroup make_int_line_group() { return IntLineGroup(IntegerOps{}, IntegerLampOps{}); }

} // namespace wreath

#endif
