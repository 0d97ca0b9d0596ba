#ifndef CHARGE_ERRORS_HPP
#define CHARGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charge {

// Bad input data: malformed instances, schema violations, out-of-range
// indices. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A solver declined the instance because a size guard would be exceeded.
// Never an approximation, always an explicit refusal. CLI exit code 3.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// The instance does not match the variant a solver handles (e.g. a
// speed-capped agent handed to the deadline DP).
class VariantError : public InputError {
 public:
  explicit VariantError(const std::string& what) : InputError(what) {}
};

// Internal invariant failure. CLI exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace charge

#endif  // CHARGE_ERRORS_HPP
