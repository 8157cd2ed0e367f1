#pragma once

#include <string>

#include "dkap/scalar.hpp"

namespace dkap {

/// Model parameters. Invariants (checked by make()):
///   lambda < 0, beta > 0, 0 < p < 1, q = 1 - p, r > 0.
struct Params {
  Rat lambda;
  Rat beta;
  Rat p;
  Rat q;
  Rat r;

  /// Validates and derives q. Throws ContractViolation on an invalid set.
  static Params make(const Rat& lambda, const Rat& beta, const Rat& p, const Rat& r);

  /// beta / lambda, the exponent of the degenerate exponential.
  Rat exponent() const { return beta / lambda; }

  std::string describe() const;
};

}  // namespace dkap
