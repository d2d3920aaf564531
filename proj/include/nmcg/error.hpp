#pragma once

#include <stdexcept>
#include <string>

namespace nmcg {

// Raised when input data violates a documented precondition or a file is
// malformed. The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

class DimensionError : public DomainError {
 public:
  explicit DimensionError(const std::string& what) : DomainError(what) {}
};

}  // namespace nmcg
