#pragma once

#include <vector>

#include "rposet/decomposition.hpp"
#include "rposet/poset.hpp"

namespace rposet {

/// A finite set of witnesses B drawn from a base chain Y together with the set
/// they certify: every target element is incomparable to some b ∈ B.
struct WitnessCover {
  Chain base_chain;                            // Y, ascending coordinate
  std::vector<ElementId> witnesses;            // B ⊆ Y, ascending coordinate, duplicate-free
  std::vector<ElementId> target;               // ascending coordinate
  std::vector<std::vector<ElementId>> paths;   // incomparability paths the witnesses came from
};

/// For a partition of p into chains X and Y, covers X by incomparability sets
/// of Y-elements. In each incomparability component meeting X, a BFS path from
/// the lowest to the highest X-element alternates X/Y; its Y-vertices are the
/// witnesses, and each one is incomparable to every X-element between its two
/// path neighbours. Throws precondition_violated if X, Y is not a partition
/// into two chains, uncoverable_element if some x ∈ X is comparable to all.
WitnessCover cover_partner_chain(const RealisticPoset& p, const Chain& X, const Chain& Y);

/// Witnesses B ⊆ Y with ∪_{b∈B} I(b) = I(Y). I(Y) is split into chains by
/// chain_partition on the induced sub-poset and each part is covered against Y
/// with cover_partner_chain. Throws not_a_chain.
WitnessCover cover_incomparables(const RealisticPoset& p, const Chain& Y);

/// ∩_{b∈X} (up_set(b) ∪ down_set(b)); the whole ground set when X is empty.
Bitset common_comparables(const RealisticPoset& p, const std::vector<ElementId>& X);

/// For a maximal chain Y, a subchain X whose common comparables are exactly Y,
/// so Y is the only maximal chain containing X. Throws not_a_chain or
/// not_maximal_chain.
std::vector<ElementId> determining_subchain(const RealisticPoset& p, const Chain& Y);

struct UniqueExtensionVerdict {
  bool ok = false;
  std::vector<Chain> maximal_chains;  // every maximal chain containing X, ascending coordinate each
};

/// Brute force: enumerates all maximal chains containing X by backtracking and
/// passes iff that family is exactly {Y}. Throws too_large above max_n.
UniqueExtensionVerdict verify_unique_extension(const RealisticPoset& p, const std::vector<ElementId>& X,
                                               const Chain& Y, std::size_t max_n = 14);

}  // namespace rposet
