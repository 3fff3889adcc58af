#pragma once

#include <stdexcept>
#include <string>

namespace dowling {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidOrderError : public Error {
 public:
  using Error::Error;
};

/// A multiplication table failed a group axiom. `axiom` names it
/// ("associativity", "identity", "inverse", "closure", "shape") and
/// `witness` holds the offending element indices.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error("group axiom violated: " + axiom + " (witness " + witness + ")"),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

class SymmetryError : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different lattices (different n or group).
class IncompatibleError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the input object failed (element outside the
/// required subposet, face not in the complex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured size cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::string projected)
      : Error(what + " (projected size " + projected + ")"), projected_(std::move(projected)) {}

  const std::string& projected() const noexcept { return projected_; }

 private:
  std::string projected_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dowling
