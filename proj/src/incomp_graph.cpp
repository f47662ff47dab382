#include "rposet/incomp_graph.hpp"

#include <algorithm>
#include <deque>

namespace rposet {

IncompGraph::IncompGraph(const RealisticPoset& p) {
  const std::size_t n = p.size();
  adj_.reserve(n);
  ordered_.resize(n);
  for (ElementId x = 0; x < n; ++x) adj_.push_back(p.incomparables(x));
  for (ElementId x = 0; x < n; ++x) {
    ordered_[x] = p.sorted_by_coordinate(adj_[x].to_vector());
  }
}

std::size_t IncompGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<IncompComponent> components(const IncompGraph& g, const RealisticPoset& p) {
  std::vector<IncompComponent> out;
  std::vector<bool> seen(p.size(), false);
  std::deque<ElementId> queue;
  // Seeds in coordinate order give a list already sorted by lo.
  for (ElementId seed : p.by_coordinate()) {
    if (seen[seed]) continue;
    IncompComponent comp;
    seen[seed] = true;
    queue.push_back(seed);
    while (!queue.empty()) {
      const ElementId x = queue.front();
      queue.pop_front();
      comp.vertices.push_back(x);
      for (ElementId y : g.ordered_neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    comp.vertices = p.sorted_by_coordinate(std::move(comp.vertices));
    comp.lo = p.coord(comp.vertices.front());
    comp.hi = p.coord(comp.vertices.back());
    comp.trivial = comp.vertices.size() == 1;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<ElementId> bfs_path(const IncompGraph& g, ElementId from, ElementId to) {
  constexpr ElementId kNone = ~ElementId{0};
  std::vector<ElementId> parent(g.size(), kNone);
  std::deque<ElementId> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] == kNone) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (ElementId y : g.ordered_neighbors(x)) {
      if (parent[y] == kNone) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (parent[to] == kNone) return {};
  std::vector<ElementId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

IntervalVerdict check_interval_structure(const RealisticPoset& p, const std::vector<IncompComponent>& comps) {
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& comp = comps[c];
    if (comp.lo > comp.hi || (comp.lo == comp.hi) != comp.trivial)
      return {false, "component " + std::to_string(c) + " has a malformed hull"};
    std::vector<ElementId> in_hull;
    for (ElementId x = 0; x < p.size(); ++x)
      if (comp.lo <= p.coord(x) && p.coord(x) <= comp.hi) in_hull.push_back(x);
    std::vector<ElementId> members = comp.vertices;
    std::sort(members.begin(), members.end());
    if (in_hull != members) {
      return {false, "component " + std::to_string(c) + " hull [" + comp.lo.str() + "," + comp.hi.str() +
                         "] holds {" + join_ids(in_hull) + "} but the component is {" + join_ids(members) + "}"};
    }
  }
  std::vector<std::size_t> idx(comps.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return comps[a].lo < comps[b].lo; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (!(comps[idx[i - 1]].hi < comps[idx[i]].lo))
      return {false, "hulls of components " + std::to_string(idx[i - 1]) + " and " + std::to_string(idx[i]) +
                         " overlap"};
  }
  return {};
}

std::size_t count_nontrivial_components(const std::vector<IncompComponent>& comps) {
  return static_cast<std::size_t>(
      std::count_if(comps.begin(), comps.end(), [](const IncompComponent& c) { return !c.trivial; }));
}

}  // namespace rposet
