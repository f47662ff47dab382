#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rposet/poset.hpp"

namespace rposet {

/// Incomparability graph: x and y are adjacent iff they are distinct and
/// incomparable in the source poset.
class IncompGraph {
public:
  explicit IncompGraph(const RealisticPoset& p);

  std::size_t size() const noexcept { return adj_.size(); }
  const Bitset& neighbors(ElementId x) const { return adj_[x]; }
  bool adjacent(ElementId a, ElementId b) const { return adj_[a].test(b); }
  /// Neighbors of x ordered by ascending coordinate.
  const std::vector<ElementId>& ordered_neighbors(ElementId x) const { return ordered_[x]; }
  std::size_t edge_count() const;

private:
  std::vector<Bitset> adj_;
  std::vector<std::vector<ElementId>> ordered_;
};

inline IncompGraph build_incomparability_graph(const RealisticPoset& p) { return IncompGraph(p); }

/// A connected component together with its coordinate hull [lo, hi]. Both
/// endpoints are attained by member elements.
struct IncompComponent {
  std::vector<ElementId> vertices;  // ascending coordinate
  Rational lo;
  Rational hi;
  bool trivial = true;
};

/// Components in ascending order of lo. Discovery is BFS from the
/// lowest-coordinate unvisited vertex with neighbors taken in coordinate order.
std::vector<IncompComponent> components(const IncompGraph& g, const RealisticPoset& p);

/// Shortest path from `from` to `to` by BFS with ascending-coordinate neighbor
/// order; empty if unreachable. Includes both endpoints.
std::vector<ElementId> bfs_path(const IncompGraph& g, ElementId from, ElementId to);

struct IntervalVerdict {
  bool ok = true;
  std::string failure;  // human-readable counterexample when !ok
};

/// Every hull contains exactly its own component's elements, and the hulls
/// are pairwise disjoint.
IntervalVerdict check_interval_structure(const RealisticPoset& p, const std::vector<IncompComponent>& comps);

std::size_t count_nontrivial_components(const std::vector<IncompComponent>& comps);

}  // namespace rposet
