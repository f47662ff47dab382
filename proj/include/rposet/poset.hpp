#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rposet/bitset.hpp"
#include "rposet/error.hpp"
#include "rposet/rational.hpp"

namespace rposet {

using ElementId = std::uint32_t;
// (a, b) means a ≺ b.
using Relation = std::pair<ElementId, ElementId>;

/// A finite poset embedded in the rationals: a ≺ b implies coord(a) < coord(b).
///
/// The strict order is stored transitively closed in both directions as dense
/// bitset rows. The reflexive order ⪯ is implicit: up_set/down_set include the
/// element itself, incomparables never does. Immutable after construction.
class RealisticPoset {
public:
  RealisticPoset() = default;

  /// Transitive closure of `relations` over `coords`. Throws PosetError with
  /// invalid_element, duplicate_coordinate, cycle_detected or not_realistic.
  static RealisticPoset build(std::vector<Rational> coords, std::span<const Relation> relations);

  /// Wraps caller-provided rows without any checking. Exists so validate()
  /// can be exercised on defective structures.
  static RealisticPoset from_raw(std::vector<Rational> coords, std::vector<Bitset> above,
                                 std::vector<Bitset> below);

  std::size_t size() const noexcept { return coords_.size(); }
  bool empty() const noexcept { return coords_.empty(); }
  const Rational& coord(ElementId x) const { return coords_[x]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  // Strict successors / predecessors.
  const Bitset& above(ElementId x) const { return above_[x]; }
  const Bitset& below(ElementId x) const { return below_[x]; }

  bool less(ElementId a, ElementId b) const { return above_[a].test(b); }
  bool is_comparable(ElementId a, ElementId b) const { return a == b || less(a, b) || less(b, a); }

  Bitset up_set(ElementId x) const;
  Bitset down_set(ElementId x) const;
  Bitset comparables(ElementId x) const;  // up_set ∪ down_set
  Bitset incomparables(ElementId x) const;
  Bitset incomparables_of_set(const Bitset& s) const;

  /// Element ids sorted by ascending coordinate, and the inverse permutation.
  const std::vector<ElementId>& by_coordinate() const noexcept { return order_; }
  std::size_t rank(ElementId x) const { return rank_[x]; }

  bool is_chain(std::span<const ElementId> ids) const;
  bool is_antichain(std::span<const ElementId> ids) const;
  /// Sorts ids by ascending coordinate (in place) and returns them.
  std::vector<ElementId> sorted_by_coordinate(std::vector<ElementId> ids) const;

  /// Every strict pair of the closed relation, lexicographic.
  std::vector<Relation> relations() const;
  /// Transitive reduction, lexicographic.
  std::vector<Relation> hasse_covers() const;

  Bitset all() const { return Bitset::full(size()); }

  friend bool operator==(const RealisticPoset& a, const RealisticPoset& b) {
    return a.coords_ == b.coords_ && a.above_ == b.above_ && a.below_ == b.below_;
  }

private:
  void index_coordinates();

  std::vector<Rational> coords_;
  std::vector<Bitset> above_;
  std::vector<Bitset> below_;
  std::vector<ElementId> order_;
  std::vector<std::size_t> rank_;
};

inline RealisticPoset build_poset(std::vector<Rational> coords, std::span<const Relation> relations) {
  return RealisticPoset::build(std::move(coords), relations);
}

enum class Violation {
  none,
  duplicate_coordinate,
  irreflexivity,
  antisymmetry,
  transitivity,
  realistic,
  consistency,  // above/below disagree
};

const char* to_string(Violation v) noexcept;

struct ValidationVerdict {
  Violation violation = Violation::none;
  std::vector<ElementId> witness;

  bool ok() const noexcept { return violation == Violation::none; }
};

/// Checks the structural invariants in a fixed order and reports the first
/// one violated together with a witness pair or triple.
ValidationVerdict validate(const RealisticPoset& p);

/// Sub-poset induced on `subset`; element i of the result is to_parent[i].
struct InducedPoset {
  RealisticPoset poset;
  std::vector<ElementId> to_parent;
};

InducedPoset induced_subposet(const RealisticPoset& p, std::span<const ElementId> subset);

/// Comma-separated ids, e.g. "1,3,5".
std::string join_ids(std::span<const ElementId> ids);

}  // namespace rposet
