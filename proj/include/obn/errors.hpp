#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace obn {

/// Raised by the text-format readers (graph6, edge lists, orientation files).
/// byte_offset() points at the first offending byte of the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Raised when an exact routine refuses an instance instead of guessing.
/// The exhaustive orientation search attaches the bound bracket it computed
/// before giving up, so callers still get sound partial output.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}

    BudgetError(const std::string& msg, int bracket_lower, int bracket_upper)
        : std::runtime_error(msg),
          bracket_(std::make_pair(bracket_lower, bracket_upper)) {}

    std::optional<std::pair<int, int>> partial_bracket() const { return bracket_; }

private:
    std::optional<std::pair<int, int>> bracket_;
};

} // namespace obn
