#pragma once

#include <string>
#include <vector>

#include "rposet/poset.hpp"

// Brute-force reference checks. Sources in this module may only use the
// RealisticPoset query surface (less / is_comparable / coord); they never call
// into the algorithms they are used to verify.
namespace rposet::oracle {

struct Verdict {
  bool ok = true;
  std::string detail;  // counterexample when !ok
};

/// Exact maximum antichain by branch and bound over subsets. Throws too_large
/// above max_n elements.
std::size_t max_antichain(const RealisticPoset& p, std::size_t max_n = 24);

/// Exact longest chain by memoized search over the strict relation.
std::size_t longest_chain(const RealisticPoset& p);

/// Longest chain ending at each element (element count, so minimal elements get 1).
std::vector<std::size_t> longest_chain_ending_at(const RealisticPoset& p);

enum class CoverMode {
  exact,     // target == ∪ I(b)
  contained  // target ⊆ ∪ I(b)
};

Verdict verify_cover(const RealisticPoset& p, const std::vector<ElementId>& target,
                     const std::vector<ElementId>& witnesses, CoverMode mode);

/// Parts are nonempty, pairwise disjoint, cover every element, and each part
/// is a chain (resp. antichain).
Verdict check_chain_partition(const RealisticPoset& p, const std::vector<std::vector<ElementId>>& chains);
Verdict check_antichain_partition(const RealisticPoset& p, const std::vector<std::vector<ElementId>>& layers);

/// Chain with no outside element comparable to all of its members.
bool is_maximal_chain(const RealisticPoset& p, const std::vector<ElementId>& chain);

}  // namespace rposet::oracle
