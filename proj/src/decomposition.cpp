#include "rposet/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace rposet {
namespace {

class HopcroftKarp {
public:
  explicit HopcroftKarp(const RealisticPoset& p) : p_(p), n_(p.size()) {
    succ_.resize(n_);
    for (ElementId x = 0; x < n_; ++x) succ_[x] = p.sorted_by_coordinate(p.above(x).to_vector());
    match_left_.assign(n_, kFree);
    match_right_.assign(n_, kFree);
    dist_.assign(n_, 0);
    cursor_.assign(n_, 0);
  }

  PathCoverMatching run() {
    std::size_t matched = 0;
    while (layer()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (ElementId x : p_.by_coordinate())
        if (match_left_[x] == kFree && augment(x)) ++matched;
    }
    PathCoverMatching out;
    out.successor = match_left_;
    for (auto& s : out.successor)
      if (s == kFree) s = PathCoverMatching::kNoSuccessor;
    out.size = matched;
    return out;
  }

private:
  static constexpr ElementId kFree = ~ElementId{0};
  static constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

  // BFS layering from the free left vertices; true if some free right vertex is reachable.
  bool layer() {
    std::deque<ElementId> queue;
    for (ElementId x : p_.by_coordinate()) {
      if (match_left_[x] == kFree) {
        dist_[x] = 0;
        queue.push_back(x);
      } else {
        dist_[x] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const ElementId x = queue.front();
      queue.pop_front();
      for (ElementId y : succ_[x]) {
        const ElementId owner = match_right_[y];
        if (owner == kFree) {
          found = true;
        } else if (dist_[owner] == kInf) {
          dist_[owner] = dist_[x] + 1;
          queue.push_back(owner);
        }
      }
    }
    return found;
  }

  bool augment(ElementId x) {
    for (std::size_t& i = cursor_[x]; i < succ_[x].size(); ++i) {
      const ElementId y = succ_[x][i];
      const ElementId owner = match_right_[y];
      if (owner == kFree || (dist_[owner] == dist_[x] + 1 && augment(owner))) {
        match_left_[x] = y;
        match_right_[y] = x;
        ++i;
        return true;
      }
    }
    dist_[x] = kInf;
    return false;
  }

  const RealisticPoset& p_;
  std::size_t n_;
  std::vector<std::vector<ElementId>> succ_;
  std::vector<ElementId> match_left_;
  std::vector<ElementId> match_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

PathCoverMatching path_cover_matching(const RealisticPoset& p) { return HopcroftKarp(p).run(); }

std::size_t width(const RealisticPoset& p) { return p.size() - path_cover_matching(p).size; }

ChainPartition chain_partition(const RealisticPoset& p) {
  const PathCoverMatching m = path_cover_matching(p);
  std::vector<bool> has_predecessor(p.size(), false);
  for (ElementId s : m.successor)
    if (s != PathCoverMatching::kNoSuccessor) has_predecessor[s] = true;

  ChainPartition out;
  // A path starts at its minimum, so walking heads in coordinate order yields
  // chains ordered by their minimum element.
  for (ElementId head : p.by_coordinate()) {
    if (has_predecessor[head]) continue;
    Chain chain;
    for (ElementId x = head; x != PathCoverMatching::kNoSuccessor; x = m.successor[x]) chain.push_back(x);
    out.chains.push_back(std::move(chain));
  }
  return out;
}

bool is_maximal_chain(const RealisticPoset& p, const Chain& chain) {
  if (!p.is_chain(chain)) return false;
  Bitset common = p.all();
  for (ElementId c : chain) common &= p.comparables(c);
  return common.count() == chain.size();
}

Chain extend_to_maximal_chain(const RealisticPoset& p, const Chain& chain) {
  if (!p.is_chain(chain)) throw PosetError(ErrorKind::not_a_chain, "{" + join_ids(chain) + "} is not a chain");
  Bitset members(p.size());
  Bitset common = p.all();
  for (ElementId c : chain) {
    members.set(c);
    common &= p.comparables(c);
  }
  for (ElementId x : p.by_coordinate()) {
    if (members.test(x) || !common.test(x)) continue;
    members.set(x);
    common &= p.comparables(x);
  }
  return p.sorted_by_coordinate(members.to_vector());
}

ChainPartition disjointify(const RealisticPoset& p, const std::vector<Chain>& maximal_chains) {
  Bitset used(p.size());
  ChainPartition out;
  for (const Chain& c : maximal_chains) {
    Chain rest;
    for (ElementId x : c) {
      if (x >= p.size()) throw PosetError(ErrorKind::invalid_element, "element " + std::to_string(x), x);
      if (!used.test(x)) rest.push_back(x);
    }
    for (ElementId x : rest) used.set(x);
    if (!rest.empty()) out.chains.push_back(p.sorted_by_coordinate(std::move(rest)));
  }
  if (used.count() != p.size()) {
    const ElementId missing = (p.all() - used).to_vector().front();
    throw PosetError(ErrorKind::coverage_gap, "element " + std::to_string(missing) + " is not covered", missing);
  }
  return out;
}

ChainPartition chain_partition_via_maximal(const RealisticPoset& p) {
  std::vector<Chain> extended;
  for (const Chain& c : chain_partition(p).chains) extended.push_back(extend_to_maximal_chain(p, c));
  return disjointify(p, extended);
}

std::size_t height(const RealisticPoset& p) {
  std::vector<std::size_t> ending_at(p.size(), 0);
  std::size_t best = 0;
  for (ElementId x : p.by_coordinate()) {
    std::size_t longest_below = 0;
    p.below(x).for_each([&](ElementId y) { longest_below = std::max(longest_below, ending_at[y]); });
    ending_at[x] = longest_below + 1;
    best = std::max(best, ending_at[x]);
  }
  return best;
}

AntichainPartition antichain_layering(const RealisticPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> remaining_preds(n);
  std::vector<ElementId> current;
  for (ElementId x = 0; x < n; ++x) {
    remaining_preds[x] = p.below(x).count();
    if (remaining_preds[x] == 0) current.push_back(x);
  }
  AntichainPartition out;
  while (!current.empty()) {
    std::vector<ElementId> next;
    for (ElementId v : current)
      p.above(v).for_each([&](ElementId y) {
        if (--remaining_preds[y] == 0) next.push_back(y);
      });
    out.layers.push_back(p.sorted_by_coordinate(std::move(current)));
    current = std::move(next);
  }
  return out;
}

}  // namespace rposet
