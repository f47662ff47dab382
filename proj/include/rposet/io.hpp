#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rposet/decomposition.hpp"
#include "rposet/poset.hpp"

namespace rposet {

/// Line-oriented poset document:
///
///   poset v1 n=<count>
///   e <id> <int | p/q>
///   r <a> <b>            (a ≺ b, any subrelation; closed on load)
///
/// '#' starts a comment; blank lines are ignored. Throws PosetError
/// (syntax_error with the 1-based line number, or any build error).
RealisticPoset parse_poset(std::string_view text);

/// Canonical form: header, elements by id, Hasse covers in lexicographic
/// order. `comment` lines, if given, follow the header prefixed with "# ".
std::string format_poset(const RealisticPoset& p, const std::vector<std::string>& comments = {});

using DotOverlay = std::variant<std::monostate, ChainPartition, AntichainPartition>;

/// DOT digraph of the Hasse diagram drawn bottom-to-top. A chain overlay fills
/// nodes by chain index; an antichain overlay puts each layer on one rank.
std::string export_dot(const RealisticPoset& p, const DotOverlay& overlay = {});

/// Flat key=value report, one fact per line, in insertion order.
class Report {
public:
  void add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  void verdict(std::string key, bool ok, const std::string& detail = {});

  bool failed() const noexcept { return failed_; }
  std::string render() const;

private:
  std::vector<std::pair<std::string, std::string>> lines_;
  bool failed_ = false;
};

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace rposet
