#pragma once

#include <vector>

#include "rposet/poset.hpp"

namespace rposet::fixtures {

inline std::vector<Rational> coords_1_to(std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t i = 1; i <= n; ++i) c.emplace_back(static_cast<std::int64_t>(i));
  return c;
}

// 0≺2, 0≺3, 1≺3 on coordinates 1..4.
inline RealisticPoset p1() {
  const std::vector<Relation> rel{{0, 2}, {0, 3}, {1, 3}};
  return RealisticPoset::build(coords_1_to(4), rel);
}

// Two interleaved 3-chains X = {0,2,4}, Y = {1,3,5} with incomparable pairs
// {0,1}, {2,3}, {3,4}, {4,5}.
inline RealisticPoset f() {
  const std::vector<Relation> rel{{0, 2}, {0, 4}, {2, 4}, {1, 3}, {1, 5}, {3, 5},
                                  {1, 2}, {1, 4}, {0, 3}, {0, 5}, {2, 5}};
  return RealisticPoset::build(coords_1_to(6), rel);
}

inline RealisticPoset total_order(std::size_t n) {
  std::vector<Relation> rel;
  for (ElementId i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return RealisticPoset::build(coords_1_to(n), rel);
}

inline RealisticPoset antichain(std::size_t n) { return RealisticPoset::build(coords_1_to(n), {}); }

inline std::vector<ElementId> ids(std::initializer_list<ElementId> l) { return l; }

}  // namespace rposet::fixtures
