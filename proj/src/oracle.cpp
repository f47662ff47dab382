#include "rposet/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace rposet::oracle {
namespace {

class MaxIndependentSet {
public:
  explicit MaxIndependentSet(std::vector<std::uint32_t> adjacency) : adj_(std::move(adjacency)) {}

  std::size_t solve() {
    const std::uint32_t all = adj_.empty() ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << adj_.size()) - 1);
    search(all, 0);
    return best_;
  }

private:
  void search(std::uint32_t candidates, std::size_t taken) {
    if (taken + static_cast<std::size_t>(std::popcount(candidates)) <= best_) return;
    if (candidates == 0) {
      best_ = taken;
      return;
    }
    const int v = std::countr_zero(candidates);
    const std::uint32_t bit = std::uint32_t{1} << v;
    search(candidates & ~bit & ~adj_[static_cast<std::size_t>(v)], taken + 1);
    search(candidates & ~bit, taken);
  }

  std::vector<std::uint32_t> adj_;
  std::size_t best_ = 0;
};

std::string part_text(const std::vector<ElementId>& part) {
  std::string s = "{";
  for (std::size_t i = 0; i < part.size(); ++i) s += (i ? "," : "") + std::to_string(part[i]);
  return s + "}";
}

bool incomparable(const RealisticPoset& p, ElementId a, ElementId b) { return a != b && !p.less(a, b) && !p.less(b, a); }

Verdict check_partition(const RealisticPoset& p, const std::vector<std::vector<ElementId>>& parts, bool chains) {
  std::vector<int> owner(p.size(), -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) return {false, "part " + std::to_string(i) + " is empty"};
    for (ElementId x : parts[i]) {
      if (x >= p.size()) return {false, "element " + std::to_string(x) + " out of range"};
      if (owner[x] != -1) return {false, "element " + std::to_string(x) + " appears twice"};
      owner[x] = static_cast<int>(i);
    }
    for (std::size_t a = 0; a < parts[i].size(); ++a)
      for (std::size_t b = a + 1; b < parts[i].size(); ++b) {
        const bool inc = incomparable(p, parts[i][a], parts[i][b]);
        if (chains == inc)
          return {false, part_text(parts[i]) + (chains ? " is not a chain" : " is not an antichain")};
      }
  }
  for (ElementId x = 0; x < p.size(); ++x)
    if (owner[x] == -1) return {false, "element " + std::to_string(x) + " is not covered"};
  return {};
}

}  // namespace

std::size_t max_antichain(const RealisticPoset& p, std::size_t max_n) {
  if (p.size() > max_n || p.size() > 32)
    throw PosetError(ErrorKind::too_large, "max_antichain oracle limited to " + std::to_string(max_n) + " elements");
  std::vector<std::uint32_t> comparability(p.size(), 0);
  for (ElementId a = 0; a < p.size(); ++a)
    for (ElementId b = 0; b < p.size(); ++b)
      if (a != b && p.is_comparable(a, b)) comparability[a] |= std::uint32_t{1} << b;
  return MaxIndependentSet(std::move(comparability)).solve();
}

std::size_t longest_chain(const RealisticPoset& p) {
  // Longest chain starting at x, filled top-down by coordinate.
  std::vector<std::size_t> memo(p.size(), 0);
  std::vector<ElementId> ids(p.size());
  for (ElementId x = 0; x < p.size(); ++x) ids[x] = x;
  std::sort(ids.begin(), ids.end(), [&](ElementId a, ElementId b) { return p.coord(b) < p.coord(a); });
  std::size_t best = 0;
  for (ElementId x : ids) {
    std::size_t longest = 0;
    for (ElementId y = 0; y < p.size(); ++y)
      if (p.less(x, y)) longest = std::max(longest, memo[y]);
    memo[x] = longest + 1;
    best = std::max(best, memo[x]);
  }
  return best;
}

std::vector<std::size_t> longest_chain_ending_at(const RealisticPoset& p) {
  std::vector<ElementId> ids(p.size());
  for (ElementId x = 0; x < p.size(); ++x) ids[x] = x;
  std::sort(ids.begin(), ids.end(), [&](ElementId a, ElementId b) { return p.coord(a) < p.coord(b); });
  std::vector<std::size_t> memo(p.size(), 0);
  for (ElementId x : ids) {
    std::size_t longest = 0;
    for (ElementId y = 0; y < p.size(); ++y)
      if (p.less(y, x)) longest = std::max(longest, memo[y]);
    memo[x] = longest + 1;
  }
  return memo;
}

Verdict verify_cover(const RealisticPoset& p, const std::vector<ElementId>& target,
                     const std::vector<ElementId>& witnesses, CoverMode mode) {
  std::vector<bool> covered(p.size(), false);
  for (ElementId b : witnesses)
    for (ElementId x = 0; x < p.size(); ++x)
      if (incomparable(p, b, x)) covered[x] = true;
  std::vector<bool> in_target(p.size(), false);
  for (ElementId t : target) in_target[t] = true;
  for (ElementId x = 0; x < p.size(); ++x) {
    if (in_target[x] && !covered[x]) return {false, "target element " + std::to_string(x) + " is not covered"};
    if (mode == CoverMode::exact && covered[x] && !in_target[x])
      return {false, "element " + std::to_string(x) + " is covered but outside the target"};
  }
  return {};
}

Verdict check_chain_partition(const RealisticPoset& p, const std::vector<std::vector<ElementId>>& chains) {
  return check_partition(p, chains, true);
}

Verdict check_antichain_partition(const RealisticPoset& p, const std::vector<std::vector<ElementId>>& layers) {
  return check_partition(p, layers, false);
}

bool is_maximal_chain(const RealisticPoset& p, const std::vector<ElementId>& chain) {
  for (std::size_t a = 0; a < chain.size(); ++a)
    for (std::size_t b = a + 1; b < chain.size(); ++b)
      if (incomparable(p, chain[a], chain[b]) || chain[a] == chain[b]) return false;
  for (ElementId x = 0; x < p.size(); ++x) {
    if (std::find(chain.begin(), chain.end(), x) != chain.end()) continue;
    bool all = true;
    for (ElementId c : chain) all = all && !incomparable(p, x, c);
    if (all) return false;
  }
  return true;
}

}  // namespace rposet::oracle
