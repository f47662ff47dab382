#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rposet {

enum class ErrorKind {
  invalid_element,
  duplicate_coordinate,
  cycle_detected,
  not_realistic,
  not_a_chain,
  not_maximal_chain,
  coverage_gap,
  precondition_violated,
  uncoverable_element,
  too_large,
  syntax_error,
};

const char* to_string(ErrorKind kind) noexcept;

// Single error type for contract violations on caller input. The optional
// detail carries the offending element id or, for syntax errors, the line.
class PosetError : public std::runtime_error {
public:
  PosetError(ErrorKind kind, const std::string& message, std::optional<std::size_t> detail = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::optional<std::size_t> detail_;
};

}  // namespace rposet
