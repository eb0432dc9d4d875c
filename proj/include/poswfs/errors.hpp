#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace poswfs {

/// Malformed input: dimension mismatch, unknown element, mismatched acting
/// pomonoid, or a value that violates its type invariants.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search ran past its configured bound. Never a disproof.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t bound)
      : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"),
        bound_(bound) {}

  std::uint64_t bound() const noexcept { return bound_; }

 private:
  std::uint64_t bound_;
};

/// The caller violated an operation's precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A post-hoc assertion of a constructed object failed.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace poswfs
