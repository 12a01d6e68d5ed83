#pragma once

#include <stdexcept>
#include <string>

namespace copsrobber {

/// Malformed input: out-of-range vertex ids, bad files, non-edges, bad parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size/state budget was exceeded. Never a silent fallback.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A policy was constructed with parameters that violate its precondition.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A policy emitted an illegal move during play.
class PolicyError : public std::runtime_error {
 public:
  PolicyError(std::string policy, const std::string& what)
      : std::runtime_error(policy + ": " + what), policy_(std::move(policy)) {}
  const std::string& policy() const noexcept { return policy_; }

 private:
  std::string policy_;
};

/// A generated structure failed its own machine verification.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant (e.g. a contradictory bound bracket).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace copsrobber
