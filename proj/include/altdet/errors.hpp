#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altdet {

/// Input violates an operation's precondition (bad index, non-closed set, carrier mismatch).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured size bound was exceeded (bitset width, enumeration bound, state cap).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_{line} {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace altdet
