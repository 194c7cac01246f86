#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cageforge {

/// Invalid input to a graph or construction routine (bad ids, self-loops,
/// out-of-range parameters).
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested prime is not covered by any of the implemented families.
class UnsupportedQError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 or edge-list input. `offset()` is the byte position of
/// the first offending character (or line start for edge lists).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace cageforge
