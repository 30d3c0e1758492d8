#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "catlens/report.hpp"

namespace catlens {

/// Malformed data: dangling or duplicate identifiers, maps that are not total.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that needs lawful input was handed something that breaks a law.
class InvalidInput : public std::runtime_error {
 public:
  InvalidInput(const std::string& what, ValidationReport report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Two structures were composed whose shared boundary does not agree.
class BoundaryMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would visit more candidates than the configured bound.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::uint64_t needed, std::uint64_t bound)
      : std::runtime_error("candidate space of at least " + std::to_string(needed) +
                           " exceeds the bound of " + std::to_string(bound)),
        needed_(needed),
        bound_(bound) {}

  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t needed_;
  std::uint64_t bound_;
};

/// Two independent computations of the same structure disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace catlens
