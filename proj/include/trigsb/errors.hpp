#pragma once

#include <stdexcept>
#include <string>

namespace trigsb {

/// Malformed or out-of-range input: unknown letters, bad tables, bad JSON.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation that is not defined in the requested mode (e.g. perp for dimonoids).
class InvalidOperation : public std::logic_error {
 public:
  explicit InvalidOperation(const std::string& what) : std::logic_error(what) {}
};

/// Leading data of the zero polynomial and similar.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace trigsb
