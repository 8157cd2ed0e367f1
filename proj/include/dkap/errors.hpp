#pragma once

#include <stdexcept>
#include <string>

namespace dkap {

/// A precondition stated by an operation's contract was not met by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Series reciprocal requested for a series whose constant term has no inverse.
class NonInvertibleSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A real-valued evaluation was requested outside the branch where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require(bool condition, const std::string& what) {
  if (!condition) throw ContractViolation(what);
}

}  // namespace dkap
