#pragma once

#include <stdexcept>
#include <string>

namespace fmlog {

/// Malformed or contract-violating input (bad arity, non-nested collection, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A request exceeds a configured enumeration or sampling bound.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

/// A direction was requested for an all-equal (zero after centering) tuple.
class DegenerateDirection : public std::domain_error {
 public:
  explicit DegenerateDirection(const std::string& what) : std::domain_error(what) {}
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

[[noreturn]] void throw_invalid(const std::string& what);
[[noreturn]] void throw_internal(const std::string& what);

}  // namespace fmlog
