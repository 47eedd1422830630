#pragma once

#include <stdexcept>
#include <string>

namespace casimir_liv {

/// Violated precondition or invariant of a physics routine (bad separation,
/// L <= -1, asymmetric k_F, unresolvable regulator schedule, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file content (wrong field types, unknown keys).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be opened or read.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace casimir_liv
