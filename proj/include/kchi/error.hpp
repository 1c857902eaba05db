#pragma once

#include <stdexcept>
#include <string>

namespace kchi {

/// Violated mathematical precondition (bad partition, size mismatch, m > n, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative routine failed to converge or produced non-finite values.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// A size cap (factorial enumeration, n^m tensor dimension) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kchi
