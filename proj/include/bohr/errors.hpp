#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Input outside a theorem's or operation's admissible region.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed arguments (all-zero polynomial, bad sample counts, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The polynomial has no sign change on the supplied bracket.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// More than one sign change was seen while scanning the bracket.
class NonUniqueRoot : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A root was located but its residual exceeds the certification gate.
class CertificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The requested operation has no meaning for this theorem / regime.
class NotApplicable : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A caller-side precondition (e.g. r above the radius) was violated.
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace bohr
