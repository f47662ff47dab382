#pragma once

#include <vector>

#include "rposet/poset.hpp"

namespace rposet {

using Chain = std::vector<ElementId>;  // ascending coordinate

struct ChainPartition {
  std::vector<Chain> chains;
};

struct AntichainPartition {
  std::vector<std::vector<ElementId>> layers;  // peeling order; each layer ascending coordinate
};

/// Maximum matching in the bipartite split of the closed strict order
/// (left copy x, right copy y, edge iff x ≺ y). successor[x] is the element
/// matched after x, or kNoSuccessor. Each matched pair is one link of a path
/// in a minimum path cover.
struct PathCoverMatching {
  static constexpr ElementId kNoSuccessor = ~ElementId{0};
  std::vector<ElementId> successor;
  std::size_t size = 0;
};

/// Hopcroft–Karp; left vertices and their neighbors are both visited in
/// ascending coordinate order so the result is fully deterministic.
PathCoverMatching path_cover_matching(const RealisticPoset& p);

/// Size of a maximum antichain, n minus the maximum matching size.
std::size_t width(const RealisticPoset& p);

/// width(p) chains covering p, ordered by each chain's minimum coordinate.
ChainPartition chain_partition(const RealisticPoset& p);

/// Greedy maximal extension: scan ascending coordinate, keep every element
/// comparable to all current members. Throws not_a_chain.
Chain extend_to_maximal_chain(const RealisticPoset& p, const Chain& chain);

/// C'_i = C_i minus the union of earlier chains; empty results are dropped.
/// Throws coverage_gap if the input does not cover every element.
ChainPartition disjointify(const RealisticPoset& p, const std::vector<Chain>& maximal_chains);

/// Extends every chain of chain_partition(p) and disjointifies the result.
ChainPartition chain_partition_via_maximal(const RealisticPoset& p);

/// Number of elements on a longest chain.
std::size_t height(const RealisticPoset& p);

/// Repeatedly removes the current minimal elements. Layer i holds exactly the
/// elements whose longest chain from below has i + 1 elements.
AntichainPartition antichain_layering(const RealisticPoset& p);

bool is_maximal_chain(const RealisticPoset& p, const Chain& chain);

}  // namespace rposet
