#include "rposet/poset.hpp"

#include <algorithm>
#include <numeric>

namespace rposet {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_element: return "InvalidElement";
    case ErrorKind::duplicate_coordinate: return "DuplicateCoordinate";
    case ErrorKind::cycle_detected: return "CycleDetected";
    case ErrorKind::not_realistic: return "NotRealistic";
    case ErrorKind::not_a_chain: return "NotAChain";
    case ErrorKind::not_maximal_chain: return "NotMaximalChain";
    case ErrorKind::coverage_gap: return "CoverageGap";
    case ErrorKind::precondition_violated: return "PreconditionViolated";
    case ErrorKind::uncoverable_element: return "UncoverableElement";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::syntax_error: return "SyntaxError";
  }
  return "Unknown";
}

const char* to_string(Violation v) noexcept {
  switch (v) {
    case Violation::none: return "none";
    case Violation::duplicate_coordinate: return "DuplicateCoordinate";
    case Violation::irreflexivity: return "IrreflexivityViolation";
    case Violation::antisymmetry: return "AntisymmetryViolation";
    case Violation::transitivity: return "TransitivityViolation";
    case Violation::realistic: return "RealisticViolation";
    case Violation::consistency: return "ConsistencyViolation";
  }
  return "unknown";
}

namespace {

// Kahn's algorithm on the raw input relation; returns true if it has a cycle.
bool has_cycle(std::size_t n, std::span<const Relation> relations) {
  std::vector<std::vector<ElementId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : relations) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::vector<ElementId> ready;
  for (ElementId x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const ElementId x = ready.back();
    ready.pop_back();
    ++seen;
    for (ElementId y : succ[x])
      if (--indegree[y] == 0) ready.push_back(y);
  }
  return seen != n;
}

}  // namespace

RealisticPoset RealisticPoset::build(std::vector<Rational> coords, std::span<const Relation> relations) {
  const std::size_t n = coords.size();
  for (auto [a, b] : relations) {
    if (a >= n || b >= n)
      throw PosetError(ErrorKind::invalid_element,
                       "relation (" + std::to_string(a) + "," + std::to_string(b) + ") references a missing element",
                       std::max(a, b));
  }

  RealisticPoset p;
  p.coords_ = std::move(coords);
  p.index_coordinates();
  for (std::size_t i = 1; i < n; ++i) {
    if (p.coords_[p.order_[i - 1]] == p.coords_[p.order_[i]])
      throw PosetError(ErrorKind::duplicate_coordinate,
                       "elements " + std::to_string(p.order_[i - 1]) + " and " + std::to_string(p.order_[i]) +
                           " share coordinate " + p.coords_[p.order_[i]].str(),
                       p.order_[i]);
  }

  for (auto [a, b] : relations)
    if (a == b) throw PosetError(ErrorKind::cycle_detected, "self-relation on " + std::to_string(a), a);
  if (has_cycle(n, relations)) throw PosetError(ErrorKind::cycle_detected, "input relation contains a directed cycle");

  std::vector<std::vector<ElementId>> succ(n);
  for (auto [a, b] : relations) {
    if (!(p.coords_[a] < p.coords_[b]))
      throw PosetError(ErrorKind::not_realistic,
                       "relation " + std::to_string(a) + " < " + std::to_string(b) + " has coord " +
                           p.coords_[a].str() + " >= " + p.coords_[b].str(),
                       a);
    succ[a].push_back(b);
  }

  // Descending coordinate order is a reverse topological order, so every
  // successor row is final before it is merged.
  p.above_.assign(n, Bitset(n));
  for (auto it = p.order_.rbegin(); it != p.order_.rend(); ++it) {
    Bitset& row = p.above_[*it];
    for (ElementId y : succ[*it]) {
      row.set(y);
      row |= p.above_[y];
    }
  }
  p.below_.assign(n, Bitset(n));
  for (ElementId x = 0; x < n; ++x) p.above_[x].for_each([&](ElementId y) { p.below_[y].set(x); });
  return p;
}

RealisticPoset RealisticPoset::from_raw(std::vector<Rational> coords, std::vector<Bitset> above,
                                        std::vector<Bitset> below) {
  RealisticPoset p;
  p.coords_ = std::move(coords);
  p.above_ = std::move(above);
  p.below_ = std::move(below);
  p.index_coordinates();
  return p;
}

void RealisticPoset::index_coordinates() {
  order_.resize(coords_.size());
  std::iota(order_.begin(), order_.end(), ElementId{0});
  std::stable_sort(order_.begin(), order_.end(), [&](ElementId a, ElementId b) { return coords_[a] < coords_[b]; });
  rank_.assign(coords_.size(), 0);
  for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r;
}

Bitset RealisticPoset::up_set(ElementId x) const {
  Bitset s = above_[x];
  s.set(x);
  return s;
}

Bitset RealisticPoset::down_set(ElementId x) const {
  Bitset s = below_[x];
  s.set(x);
  return s;
}

Bitset RealisticPoset::comparables(ElementId x) const {
  Bitset s = above_[x] | below_[x];
  s.set(x);
  return s;
}

Bitset RealisticPoset::incomparables(ElementId x) const {
  Bitset s = Bitset::nor(above_[x], below_[x]);
  s.reset(x);
  return s;
}

Bitset RealisticPoset::incomparables_of_set(const Bitset& s) const {
  Bitset out(size());
  s.for_each([&](ElementId x) { out |= incomparables(x); });
  return out;
}

bool RealisticPoset::is_chain(std::span<const ElementId> ids) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!is_comparable(ids[i], ids[j])) return false;
  return true;
}

bool RealisticPoset::is_antichain(std::span<const ElementId> ids) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (ids[i] == ids[j] || is_comparable(ids[i], ids[j])) return false;
  return true;
}

std::vector<ElementId> RealisticPoset::sorted_by_coordinate(std::vector<ElementId> ids) const {
  std::sort(ids.begin(), ids.end(), [&](ElementId a, ElementId b) { return rank_[a] < rank_[b]; });
  return ids;
}

std::vector<Relation> RealisticPoset::relations() const {
  std::vector<Relation> out;
  for (ElementId a = 0; a < size(); ++a) above_[a].for_each([&](ElementId b) { out.emplace_back(a, b); });
  return out;
}

std::vector<Relation> RealisticPoset::hasse_covers() const {
  std::vector<Relation> out;
  for (ElementId a = 0; a < size(); ++a)
    above_[a].for_each([&](ElementId b) {
      if (!above_[a].intersects(below_[b])) out.emplace_back(a, b);
    });
  return out;
}

ValidationVerdict validate(const RealisticPoset& p) {
  const std::size_t n = p.size();
  for (std::size_t r = 1; r < n; ++r) {
    const ElementId a = p.by_coordinate()[r - 1], b = p.by_coordinate()[r];
    if (p.coord(a) == p.coord(b)) return {Violation::duplicate_coordinate, {a, b}};
  }
  for (ElementId x = 0; x < n; ++x)
    if (p.above(x).test(x) || p.below(x).test(x)) return {Violation::irreflexivity, {x}};
  for (ElementId x = 0; x < n; ++x) {
    if (p.above(x).intersects(p.below(x))) {
      const Bitset both = p.above(x) & p.below(x);
      return {Violation::antisymmetry, {x, both.to_vector().front()}};
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y : p.above(x).to_vector()) {
      if (!p.above(y).is_subset_of(p.above(x))) {
        const ElementId z = (p.above(y) - p.above(x)).to_vector().front();
        return {Violation::transitivity, {x, y, z}};
      }
    }
  }
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y : p.above(x).to_vector())
      if (!(p.coord(x) < p.coord(y))) return {Violation::realistic, {x, y}};
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (p.above(x).test(y) != p.below(y).test(x)) return {Violation::consistency, {x, y}};
  return {};
}

InducedPoset induced_subposet(const RealisticPoset& p, std::span<const ElementId> subset) {
  InducedPoset out;
  out.to_parent.assign(subset.begin(), subset.end());
  std::vector<Rational> coords;
  coords.reserve(subset.size());
  for (ElementId x : subset) coords.push_back(p.coord(x));
  std::vector<Relation> rel;
  for (ElementId i = 0; i < subset.size(); ++i)
    for (ElementId j = 0; j < subset.size(); ++j)
      if (p.less(subset[i], subset[j])) rel.emplace_back(i, j);
  out.poset = RealisticPoset::build(std::move(coords), rel);
  return out;
}

std::string join_ids(std::span<const ElementId> ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

}  // namespace rposet
