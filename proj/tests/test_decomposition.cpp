#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "rposet/decomposition.hpp"
#include "rposet/generators.hpp"
#include "rposet/oracle.hpp"

using namespace rposet;
using fixtures::ids;

namespace {

RealisticPoset mixed(std::uint64_t seed, std::size_t max_n) {
  const std::size_t n = seed % (max_n + 1);
  switch (seed % 3) {
    case 0: return gen_forward_dag(n, Rational(static_cast<std::int64_t>(seed % 7), 6), seed);
    case 1: return gen_k_chains(n, n ? 1 + seed % n : 1, Rational(static_cast<std::int64_t>(seed % 4), 6), seed);
    default: return gen_interval_order(n, seed);
  }
}

}  // namespace

TEST_CASE("width") {
  CHECK(width(fixtures::total_order(7)) == 1);
  CHECK(width(fixtures::antichain(5)) == 5);
  CHECK(width(fixtures::p1()) == 2);
  CHECK(width(fixtures::f()) == 2);
  CHECK(width(RealisticPoset::build({}, {})) == 0);
}

TEST_CASE("chain_partition") {
  CHECK(chain_partition(fixtures::total_order(4)).chains == std::vector<Chain>{ids({0, 1, 2, 3})});
  // Golden: pinned to ascending-coordinate matching order.
  CHECK(chain_partition(fixtures::p1()).chains == std::vector<Chain>{ids({0, 2}), ids({1, 3})});
  CHECK(chain_partition(fixtures::f()).chains == std::vector<Chain>{ids({0, 2, 4}), ids({1, 3, 5})});
  const auto anti = chain_partition(fixtures::antichain(3)).chains;
  CHECK(anti == std::vector<Chain>{ids({0}), ids({1}), ids({2})});
  CHECK(chain_partition(RealisticPoset::build({}, {})).chains.empty());
}

TEST_CASE("extend_to_maximal_chain") {
  const auto t = fixtures::total_order(4);
  CHECK(extend_to_maximal_chain(t, {}) == ids({0, 1, 2, 3}));
  const auto p = fixtures::p1();
  CHECK(extend_to_maximal_chain(p, ids({0})) == ids({0, 2}));
  CHECK(extend_to_maximal_chain(p, ids({1, 3})) == ids({1, 3}));
  CHECK(oracle::is_maximal_chain(p, ids({0, 2})));
  try {
    extend_to_maximal_chain(p, ids({0, 1}));
    FAIL("expected NotAChain");
  } catch (const PosetError& e) {
    CHECK(e.kind() == ErrorKind::not_a_chain);
  }
}

TEST_CASE("disjointify") {
  const auto p = fixtures::p1();
  CHECK(disjointify(p, {ids({0, 2}), ids({1, 3})}).chains == std::vector<Chain>{ids({0, 2}), ids({1, 3})});
  const auto t = fixtures::total_order(3);
  CHECK(disjointify(t, {ids({0, 1, 2}), ids({0, 1, 2})}).chains == std::vector<Chain>{ids({0, 1, 2})});
  const auto f = fixtures::f();
  // {0,2,4} and {1,2,5}: the second loses 2.
  CHECK(disjointify(f, {ids({0, 2, 4}), ids({1, 2, 5}), ids({0, 3, 5})}).chains ==
        std::vector<Chain>{ids({0, 2, 4}), ids({1, 5}), ids({3})});
  try {
    disjointify(p, {ids({0, 2})});
    FAIL("expected CoverageGap");
  } catch (const PosetError& e) {
    CHECK(e.kind() == ErrorKind::coverage_gap);
    CHECK(e.detail() == std::size_t{1});
  }
}

TEST_CASE("height and antichain layering") {
  CHECK(height(fixtures::antichain(4)) == 1);
  CHECK(height(fixtures::total_order(6)) == 6);
  CHECK(height(fixtures::p1()) == 2);
  CHECK(height(RealisticPoset::build({}, {})) == 0);

  const auto total = antichain_layering(fixtures::total_order(3)).layers;
  CHECK(total == std::vector<std::vector<ElementId>>{ids({0}), ids({1}), ids({2})});
  CHECK(antichain_layering(fixtures::p1()).layers == std::vector<std::vector<ElementId>>{ids({0, 1}), ids({2, 3})});
  CHECK(antichain_layering(fixtures::f()).layers ==
        std::vector<std::vector<ElementId>>{ids({0, 1}), ids({2, 3}), ids({4, 5})});
  CHECK(antichain_layering(RealisticPoset::build({}, {})).layers.empty());
}

TEST_CASE("Dilworth and Mirsky equalities against oracles") {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const auto p = mixed(seed, 16);
    CAPTURE(seed);
    const auto part = chain_partition(p);
    CHECK(oracle::check_chain_partition(p, part.chains).ok);
    CHECK(part.chains.size() == width(p));
    CHECK(width(p) == oracle::max_antichain(p));
    for (const Chain& c : part.chains)
      CHECK(std::is_sorted(c.begin(), c.end(), [&](ElementId a, ElementId b) { return p.coord(a) < p.coord(b); }));
    for (std::size_t i = 1; i < part.chains.size(); ++i)
      CHECK(p.coord(part.chains[i - 1].front()) < p.coord(part.chains[i].front()));

    const auto layering = antichain_layering(p);
    CHECK(oracle::check_antichain_partition(p, layering.layers).ok);
    CHECK(layering.layers.size() == height(p));
    CHECK(height(p) == oracle::longest_chain(p));
    const auto ending = oracle::longest_chain_ending_at(p);
    for (std::size_t i = 0; i < layering.layers.size(); ++i)
      for (ElementId x : layering.layers[i]) CHECK(ending[x] == i + 1);
  }
}

TEST_CASE("maximal extension and disjointify on generated posets") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto p = mixed(seed, 30);
    CAPTURE(seed);
    std::vector<Chain> extended;
    for (const Chain& c : chain_partition(p).chains) {
      const Chain ext = extend_to_maximal_chain(p, c);
      CHECK(oracle::is_maximal_chain(p, ext));
      CHECK(is_maximal_chain(p, ext));
      CHECK(std::includes(ext.begin(), ext.end(), c.begin(), c.end(),
                          [&](ElementId a, ElementId b) { return p.coord(a) < p.coord(b); }));
      CHECK(extend_to_maximal_chain(p, ext) == ext);
      extended.push_back(ext);
    }
    const auto part = disjointify(p, extended);
    CHECK(oracle::check_chain_partition(p, part.chains).ok);
    CHECK(part.chains.size() == width(p));
    CHECK(chain_partition_via_maximal(p).chains == part.chains);
  }
}

TEST_CASE("width scales past the oracle range") {
  const auto p = gen_k_chains(1500, 9, Rational(1, 50), 77);
  const auto part = chain_partition(p);
  CHECK(part.chains.size() <= 9);
  CHECK(oracle::check_chain_partition(p, part.chains).ok);
  CHECK(antichain_layering(p).layers.size() == oracle::longest_chain(p));
}
