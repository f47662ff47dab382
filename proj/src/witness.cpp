#include "rposet/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "rposet/incomp_graph.hpp"

namespace rposet {
namespace {

void require_chain(const RealisticPoset& p, const std::vector<ElementId>& c) {
  for (ElementId x : c)
    if (x >= p.size()) throw PosetError(ErrorKind::invalid_element, "element " + std::to_string(x), x);
  if (!p.is_chain(c)) throw PosetError(ErrorKind::not_a_chain, "{" + join_ids(c) + "} is not a chain");
}

// Closed coordinate interval spanned by two path vertices, either orientation.
struct Span {
  Rational lo, hi;
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
};

Span span_of(const RealisticPoset& p, ElementId a, ElementId b) {
  const Rational& ca = p.coord(a);
  const Rational& cb = p.coord(b);
  return ca < cb ? Span{ca, cb} : Span{cb, ca};
}

}  // namespace

WitnessCover cover_partner_chain(const RealisticPoset& p, const Chain& X, const Chain& Y) {
  const std::size_t n = p.size();
  for (const Chain* c : {&X, &Y})
    for (ElementId x : *c)
      if (x >= n) throw PosetError(ErrorKind::invalid_element, "element " + std::to_string(x), x);
  Bitset in_x = Bitset::from(n, X);
  Bitset in_y = Bitset::from(n, Y);
  if (in_x.count() != X.size() || in_y.count() != Y.size() || in_x.intersects(in_y) ||
      in_x.count() + in_y.count() != n || !p.is_chain(X) || !p.is_chain(Y))
    throw PosetError(ErrorKind::precondition_violated, "NotAPartitionIntoTwoChains");

  const IncompGraph g(p);
  for (ElementId x : X)
    if (g.neighbors(x).none())
      throw PosetError(ErrorKind::uncoverable_element,
                       "element " + std::to_string(x) + " is comparable to every element", x);

  WitnessCover cover;
  cover.base_chain = p.sorted_by_coordinate(Y);
  cover.target = p.sorted_by_coordinate(X);
  Bitset witnesses(n);

  for (const IncompComponent& comp : components(g, p)) {
    std::vector<ElementId> part;  // A = X ∩ V_C, ascending coordinate
    for (ElementId v : comp.vertices)
      if (in_x.test(v)) part.push_back(v);
    if (part.empty()) continue;

    const ElementId lowest = part.front();
    const ElementId highest = part.back();
    std::vector<ElementId> path;
    if (lowest == highest) {
      // Single X-vertex: one incomparable partner suffices.
      path = {lowest, g.ordered_neighbors(lowest).front()};
    } else {
      path = bfs_path(g, lowest, highest);
      if (path.empty()) throw std::logic_error("no path inside an incomparability component");
    }

    for (std::size_t i = 0; i < path.size(); ++i) {
      const bool expect_x = i % 2 == 0;
      if (in_x.test(path[i]) != expect_x) throw std::logic_error("incomparability path does not alternate X/Y");
    }

    // Each Y-vertex b_j sits between a_j and a_{j+1}; every element of A with
    // coordinate between them must be incomparable to b_j.
    for (std::size_t j = 1; j < path.size(); j += 2) {
      const ElementId b = path[j];
      const Span span = j + 1 < path.size() ? span_of(p, path[j - 1], path[j + 1]) : span_of(p, path[j - 1], path[j - 1]);
      for (ElementId a : part)
        if (span.contains(p.coord(a)) && p.is_comparable(a, b))
          throw std::logic_error("witness " + std::to_string(b) + " is comparable to " + std::to_string(a) +
                                 " inside its path interval");
      witnesses.set(b);
    }
    cover.paths.push_back(std::move(path));
  }

  cover.witnesses = p.sorted_by_coordinate(witnesses.to_vector());
  if (!in_x.is_subset_of(p.incomparables_of_set(witnesses)))
    throw std::logic_error("partner-chain witnesses fail to cover X");
  return cover;
}

WitnessCover cover_incomparables(const RealisticPoset& p, const Chain& Y) {
  require_chain(p, Y);
  const Bitset in_y = Bitset::from(p.size(), Y);
  const Bitset target = p.incomparables_of_set(in_y);

  WitnessCover cover;
  cover.base_chain = p.sorted_by_coordinate(Y);
  cover.target = p.sorted_by_coordinate(target.to_vector());
  Bitset witnesses(p.size());

  const InducedPoset on_target = induced_subposet(p, cover.target);
  for (const Chain& local : chain_partition(on_target.poset).chains) {
    // Sub-poset P_i on X_i ∪ Y; within it no element of X_i is comparable to all.
    std::vector<ElementId> members;
    for (ElementId i : local) members.push_back(on_target.to_parent[i]);
    const std::size_t x_count = members.size();
    members.insert(members.end(), cover.base_chain.begin(), cover.base_chain.end());
    const InducedPoset sub = induced_subposet(p, members);

    Chain x_local, y_local;
    for (ElementId i = 0; i < members.size(); ++i) (i < x_count ? x_local : y_local).push_back(i);
    WitnessCover part = cover_partner_chain(sub.poset, x_local, y_local);
    for (ElementId b : part.witnesses) witnesses.set(sub.to_parent[b]);
    for (auto& path : part.paths) {
      for (ElementId& v : path) v = sub.to_parent[v];
      cover.paths.push_back(std::move(path));
    }
  }

  cover.witnesses = p.sorted_by_coordinate(witnesses.to_vector());
  if (!(p.incomparables_of_set(witnesses) == target))
    throw std::logic_error("witness union differs from the incomparables of the chain");
  return cover;
}

Bitset common_comparables(const RealisticPoset& p, const std::vector<ElementId>& X) {
  Bitset common = p.all();
  for (ElementId b : X) common &= p.comparables(b);
  return common;
}

std::vector<ElementId> determining_subchain(const RealisticPoset& p, const Chain& Y) {
  require_chain(p, Y);
  if (!is_maximal_chain(p, Y))
    throw PosetError(ErrorKind::not_maximal_chain, "{" + join_ids(Y) + "} is not a maximal chain");
  std::vector<ElementId> X = cover_incomparables(p, Y).witnesses;
  if (!(common_comparables(p, X) == Bitset::from(p.size(), Y)))
    throw std::logic_error("determining subchain does not pin down its maximal chain");
  return X;
}

namespace {

// Include/exclude backtracking over candidates in coordinate order. A leaf is
// recorded when no candidate outside the chosen set is comparable to all of it.
class MaximalChainEnumerator {
public:
  MaximalChainEnumerator(const RealisticPoset& p, std::vector<ElementId> candidates, std::vector<ElementId> fixed)
      : p_(p), candidates_(std::move(candidates)), chosen_(std::move(fixed)) {}

  std::vector<Chain> run() {
    recurse(0);
    return std::move(found_);
  }

private:
  bool fits(ElementId x) const {
    for (ElementId c : chosen_)
      if (!p_.is_comparable(x, c)) return false;
    return true;
  }

  void recurse(std::size_t i) {
    if (i == candidates_.size()) {
      for (ElementId x = 0; x < p_.size(); ++x)
        if (std::find(chosen_.begin(), chosen_.end(), x) == chosen_.end() && fits(x)) return;
      found_.push_back(p_.sorted_by_coordinate(chosen_));
      return;
    }
    const ElementId x = candidates_[i];
    if (fits(x)) {
      chosen_.push_back(x);
      recurse(i + 1);
      chosen_.pop_back();
    }
    recurse(i + 1);
  }

  const RealisticPoset& p_;
  std::vector<ElementId> candidates_;
  std::vector<ElementId> chosen_;
  std::vector<Chain> found_;
};

}  // namespace

UniqueExtensionVerdict verify_unique_extension(const RealisticPoset& p, const std::vector<ElementId>& X,
                                               const Chain& Y, std::size_t max_n) {
  if (p.size() > max_n)
    throw PosetError(ErrorKind::too_large,
                     "enumeration limited to " + std::to_string(max_n) + " elements, got " + std::to_string(p.size()));
  require_chain(p, X);
  require_chain(p, Y);

  std::vector<ElementId> candidates;
  for (ElementId x : p.by_coordinate())
    if (std::find(X.begin(), X.end(), x) == X.end()) candidates.push_back(x);

  UniqueExtensionVerdict verdict;
  verdict.maximal_chains = MaximalChainEnumerator(p, std::move(candidates), X).run();
  verdict.ok = verdict.maximal_chains.size() == 1 && verdict.maximal_chains.front() == p.sorted_by_coordinate(Y);
  return verdict;
}

}  // namespace rposet
