#pragma once

#include <stdexcept>
#include <string>

namespace cannonball {

/// Malformed or inconsistent user input (files, demand lists, parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain, e.g. a layer index past the
/// stacking sequence or a vertex with no grid triangle.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller broke a documented precondition of a coloring subroutine.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A structural claim the coloring pipeline relies on did not hold.
/// `diagnostics` carries a serialized description of the offending
/// configuration.
class InvariantFailure : public std::logic_error {
 public:
  InvariantFailure(const std::string& what, std::string diagnostics = {})
      : std::logic_error(what), diagnostics_(std::move(diagnostics)) {}

  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

}  // namespace cannonball
