#ifndef BINFORM_ERRORS_HPP
#define BINFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace binform {

/// A precondition on a mathematical argument was violated (even modulus,
/// composite where a prime is required, empty index range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Division by a residue that is zero modulo the prime. Kept distinct from
/// DomainError so callers can treat a pole as its own case.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Arithmetic between residues of different moduli.
class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bad campaign or command-line configuration.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace binform

#endif  // BINFORM_ERRORS_HPP
