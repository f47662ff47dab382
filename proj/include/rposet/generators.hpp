#pragma once

#include <cstdint>
#include <string>

#include "rposet/poset.hpp"
#include "rposet/rational.hpp"

namespace rposet {

enum class GenKind { forward_dag, k_chains, interval_order };

const char* to_string(GenKind kind) noexcept;
GenKind parse_gen_kind(const std::string& name);  // throws std::invalid_argument

struct GenSpec {
  GenKind kind = GenKind::forward_dag;
  std::size_t n = 0;
  // Edge probability for forward_dag, chain count k for k_chains; unused by interval_order.
  Rational param{1, 2};
  Rational cross{1, 4};  // cross-chain probability for k_chains
  std::uint64_t seed = 0;

  std::string str() const;
};

/// Coordinates 1..n; each forward pair (i, j), visited lexicographically,
/// is related with probability edge_prob.
RealisticPoset gen_forward_dag(std::size_t n, const Rational& edge_prob, std::uint64_t seed);

/// n elements spread over k chains (round-robin assignment, then shuffled);
/// forward pairs inside a chain always related, across chains with
/// probability cross_prob. Width is at most k.
RealisticPoset gen_k_chains(std::size_t n, std::size_t k, const Rational& cross_prob, std::uint64_t seed);

/// Random intervals with dyadic endpoints (denominator 2^20) and distinct left
/// ends; x ≺ y iff x's interval ends before y's begins. Coordinate = left end.
RealisticPoset gen_interval_order(std::size_t n, std::uint64_t seed);

RealisticPoset generate(const GenSpec& spec);

}  // namespace rposet
