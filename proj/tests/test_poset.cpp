#include <doctest.h>

#include "fixtures.hpp"
#include "rposet/generators.hpp"
#include "rposet/poset.hpp"

using namespace rposet;
using fixtures::ids;

namespace {

std::vector<ElementId> v(const Bitset& b) { return b.to_vector(); }

ErrorKind build_error(std::vector<Rational> coords, std::vector<Relation> rel) {
  try {
    RealisticPoset::build(std::move(coords), rel);
  } catch (const PosetError& e) {
    return e.kind();
  }
  FAIL("expected a PosetError");
  return ErrorKind::syntax_error;
}

}  // namespace

TEST_CASE("build_poset closes the relation") {
  const std::vector<Relation> rel{{0, 1}, {1, 2}};
  const auto p = RealisticPoset::build(fixtures::coords_1_to(3), rel);
  CHECK(p.less(0, 2));
  CHECK(p.relations() == std::vector<Relation>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(validate(p).ok());
}

TEST_CASE("P1 has exactly its three comparabilities") {
  const auto p = fixtures::p1();
  CHECK(p.relations() == std::vector<Relation>{{0, 2}, {0, 3}, {1, 3}});
  std::size_t comparable_pairs = 0;
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = a + 1; b < 4; ++b) comparable_pairs += p.is_comparable(a, b);
  CHECK(comparable_pairs == 3);
}

TEST_CASE("build_poset errors") {
  CHECK(build_error({Rational(1), Rational(2)}, {{1, 0}}) == ErrorKind::not_realistic);
  CHECK(build_error({Rational(1), Rational(1)}, {}) == ErrorKind::duplicate_coordinate);
  CHECK(build_error({Rational(1, 2), Rational(2, 4)}, {}) == ErrorKind::duplicate_coordinate);
  CHECK(build_error({Rational(1), Rational(2)}, {{0, 1}, {1, 0}}) == ErrorKind::cycle_detected);
  CHECK(build_error({Rational(1)}, {{0, 0}}) == ErrorKind::cycle_detected);
  CHECK(build_error({Rational(1), Rational(2)}, {{0, 5}}) == ErrorKind::invalid_element);
}

TEST_CASE("comparability queries on P1") {
  const auto p = fixtures::p1();
  CHECK(p.is_comparable(0, 0));
  CHECK(p.is_comparable(0, 2));
  CHECK_FALSE(p.is_comparable(0, 1));
  CHECK(v(p.up_set(0)) == ids({0, 2, 3}));
  CHECK(v(p.down_set(3)) == ids({0, 1, 3}));
  CHECK(v(p.incomparables(2)) == ids({1, 3}));
  CHECK(v(p.incomparables_of_set(Bitset::from(4, ids({0, 2})))) == ids({1, 3}));
  CHECK(p.incomparables_of_set(Bitset(4)).none());
}

TEST_CASE("queries on total orders, antichains and the empty poset") {
  const auto t = fixtures::total_order(3);
  CHECK(v(t.up_set(0)) == ids({0, 1, 2}));
  for (ElementId x = 0; x < 3; ++x) CHECK(t.incomparables(x).none());
  CHECK(t.incomparables_of_set(t.all()).none());

  const auto a = fixtures::antichain(3);
  CHECK(v(a.incomparables(1)) == ids({0, 2}));

  const RealisticPoset empty = RealisticPoset::build({}, {});
  CHECK(empty.size() == 0);
  CHECK(validate(empty).ok());
  CHECK(empty.relations().empty());
  CHECK(empty.incomparables_of_set(Bitset(0)).none());
}

TEST_CASE("validate reports constructed defects") {
  SUBCASE("missing closure pair") {
    // 0≺1≺2 without 0≺2, stored consistently in both directions.
    std::vector<Bitset> above(3, Bitset(3)), below(3, Bitset(3));
    above[0].set(1), below[1].set(0);
    above[1].set(2), below[2].set(1);
    const auto p = RealisticPoset::from_raw(fixtures::coords_1_to(3), above, below);
    const auto verdict = validate(p);
    CHECK(verdict.violation == Violation::transitivity);
    CHECK(verdict.witness == ids({0, 1, 2}));
  }
  SUBCASE("order against coordinates") {
    std::vector<Bitset> above(2, Bitset(2)), below(2, Bitset(2));
    above[1].set(0), below[0].set(1);  // 1 ≺ 0 but coord(1) = 2 > coord(0) = 1
    const auto verdict = validate(RealisticPoset::from_raw(fixtures::coords_1_to(2), above, below));
    CHECK(verdict.violation == Violation::realistic);
    CHECK(verdict.witness == ids({1, 0}));
  }
  SUBCASE("reflexive pair") {
    std::vector<Bitset> above(2, Bitset(2)), below(2, Bitset(2));
    above[0].set(0);
    CHECK(validate(RealisticPoset::from_raw(fixtures::coords_1_to(2), above, below)).violation ==
          Violation::irreflexivity);
  }
  SUBCASE("two-way pair") {
    std::vector<Bitset> above(2, Bitset(2)), below(2, Bitset(2));
    above[0].set(1), below[0].set(1);
    CHECK(validate(RealisticPoset::from_raw(fixtures::coords_1_to(2), above, below)).violation ==
          Violation::antisymmetry);
  }
  SUBCASE("above without matching below") {
    std::vector<Bitset> above(2, Bitset(2)), below(2, Bitset(2));
    above[0].set(1);
    const auto verdict = validate(RealisticPoset::from_raw(fixtures::coords_1_to(2), above, below));
    CHECK(verdict.violation == Violation::consistency);
  }
}

TEST_CASE("query invariants hold on generated posets") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto p = seed % 2 ? gen_forward_dag(seed % 23, Rational(static_cast<std::int64_t>(seed % 5), 4), seed)
                            : gen_interval_order(seed % 29, seed);
    CAPTURE(seed);
    REQUIRE(validate(p).ok());
    const Bitset all = p.all();
    for (ElementId x = 0; x < p.size(); ++x) {
      const Bitset up = p.up_set(x), down = p.down_set(x), inc = p.incomparables(x);
      Bitset self(p.size());
      self.set(x);
      CHECK((up & down) == self);
      CHECK((up | down | inc) == all);
      CHECK_FALSE(inc.intersects(up | down));
      CHECK_FALSE(inc.test(x));
      for (ElementId y = 0; y < p.size(); ++y) CHECK(inc.test(y) == p.incomparables(y).test(x));
      p.above(x).for_each([&](ElementId y) { CHECK(p.coord(x) < p.coord(y)); });
    }
    // Rebuilding from the closed relation is a fixpoint.
    CHECK(RealisticPoset::build(p.coords(), p.relations()) == p);
  }
}

TEST_CASE("hasse covers and induced sub-posets") {
  CHECK(fixtures::p1().hasse_covers() == std::vector<Relation>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(fixtures::total_order(4).hasse_covers() == std::vector<Relation>{{0, 1}, {1, 2}, {2, 3}});

  const auto f = fixtures::f();
  const std::vector<ElementId> subset{5, 1, 3};
  const InducedPoset sub = induced_subposet(f, subset);
  CHECK(sub.poset.size() == 3);
  CHECK(sub.to_parent == subset);
  CHECK(sub.poset.less(1, 2));  // 1 ≺ 3 in F
  CHECK(sub.poset.less(1, 0));  // 1 ≺ 5
  CHECK(sub.poset.less(2, 0));  // 3 ≺ 5
  CHECK(sub.poset.coord(0) == Rational(6));
}
