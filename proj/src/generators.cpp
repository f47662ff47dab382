#include "rposet/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "rposet/prng.hpp"

namespace rposet {

const char* to_string(GenKind kind) noexcept {
  switch (kind) {
    case GenKind::forward_dag: return "forward_dag";
    case GenKind::k_chains: return "k_chains";
    case GenKind::interval_order: return "interval_order";
  }
  return "unknown";
}

GenKind parse_gen_kind(const std::string& name) {
  for (GenKind k : {GenKind::forward_dag, GenKind::k_chains, GenKind::interval_order})
    if (name == to_string(k)) return k;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

std::string GenSpec::str() const {
  std::string s = std::string("kind=") + to_string(kind) + " n=" + std::to_string(n);
  if (kind != GenKind::interval_order) s += " param=" + param.str();
  if (kind == GenKind::k_chains) s += " cross=" + cross.str();
  s += " seed=" + std::to_string(seed);
  return s;
}

namespace {

std::vector<Rational> integer_coords(std::size_t n) {
  std::vector<Rational> coords;
  coords.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coords.emplace_back(static_cast<std::int64_t>(i + 1));
  return coords;
}

}  // namespace

RealisticPoset gen_forward_dag(std::size_t n, const Rational& edge_prob, std::uint64_t seed) {
  if (edge_prob < Rational(0) || edge_prob > Rational(1))
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  Prng rng(seed);
  std::vector<Relation> rel;
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = i + 1; j < n; ++j)
      if (rng.bernoulli(edge_prob)) rel.emplace_back(i, j);
  return RealisticPoset::build(integer_coords(n), rel);
}

RealisticPoset gen_k_chains(std::size_t n, std::size_t k, const Rational& cross_prob, std::uint64_t seed) {
  if (n > 0 && (k < 1 || k > n)) throw std::invalid_argument("k_chains needs 1 <= k <= n");
  if (cross_prob < Rational(0) || cross_prob > Rational(1))
    throw std::invalid_argument("cross probability must lie in [0, 1]");
  Prng rng(seed);
  std::vector<std::size_t> chain_of(n);
  for (std::size_t i = 0; i < n; ++i) chain_of[i] = i % k;
  for (std::size_t i = n; i > 1; --i) std::swap(chain_of[i - 1], chain_of[rng.below(i)]);

  std::vector<Relation> rel;
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = i + 1; j < n; ++j)
      if (chain_of[i] == chain_of[j] || rng.bernoulli(cross_prob)) rel.emplace_back(i, j);
  return RealisticPoset::build(integer_coords(n), rel);
}

RealisticPoset gen_interval_order(std::size_t n, std::uint64_t seed) {
  constexpr std::int64_t kDen = std::int64_t{1} << 20;
  Prng rng(seed);
  // Density knob: lengths up to scale/n of the unit range.
  const std::uint64_t scale = rng.between(1, 4);
  const std::uint64_t max_len = n ? scale * static_cast<std::uint64_t>(kDen) / n : 0;

  std::set<std::int64_t> used;
  std::vector<std::pair<std::int64_t, std::int64_t>> intervals;  // numerators over kDen
  intervals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t left;
    do {
      left = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(kDen)));
    } while (!used.insert(left).second);
    const auto len = static_cast<std::int64_t>(rng.between(0, max_len));
    intervals.emplace_back(left, left + len);
  }

  std::vector<Rational> coords;
  coords.reserve(n);
  for (const auto& iv : intervals) coords.emplace_back(iv.first, kDen);
  std::vector<Relation> rel;
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (intervals[x].second < intervals[y].first) rel.emplace_back(x, y);
  return RealisticPoset::build(std::move(coords), rel);
}

RealisticPoset generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::forward_dag: return gen_forward_dag(spec.n, spec.param, spec.seed);
    case GenKind::k_chains: {
      if (spec.param.den() != 1 || spec.param.num() < 1)
        throw std::invalid_argument("k_chains param must be a positive integer k");
      return gen_k_chains(spec.n, static_cast<std::size_t>(spec.param.num()), spec.cross, spec.seed);
    }
    case GenKind::interval_order: return gen_interval_order(spec.n, spec.seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace rposet
