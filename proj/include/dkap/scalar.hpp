#pragma once

// Scalar types shared by every module.
//
//   Int  - arbitrary precision integer (GMP)
//   Rat  - arbitrary precision rational, always in lowest terms (GMP mpq)
//   Real - MPFR float whose precision is taken from the thread's current
//          working precision at construction time (see ScopedPrecision)
//
// Expression templates are disabled so the types compose cleanly with Eigen
// and with the generic Poly/Series containers.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace dkap {

namespace mp = boost::multiprecision;

using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Default working precision in significant decimal digits.
inline constexpr unsigned kDefaultDigits = 60;
/// Smallest working precision accepted for acceptance-grade runs.
inline constexpr unsigned kMinimumDigits = 40;

/// Sets the MPFR working precision for the lifetime of the guard and restores
/// the previous value on exit. MPFR's default precision is process wide, so
/// guards must not be interleaved across threads.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

/// Parses "a", "-a", "a/b" or "-a/b" into a reduced rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical "num/den" form; integers print without a denominator.
std::string to_string(const Rat& value);

/// Scientific decimal representation with `digits` significant digits.
std::string to_string(const Real& value, int digits = 30);

Real to_real(const Rat& value);
Real to_real(const Int& value);

bool is_integer(const Rat& value);

/// |a - b| / max(|b|, tiny) style relative gap; returns |a - b| when b == 0.
Real relative_gap(const Real& a, const Real& b);

/// 10^(-k) at the current working precision.
Real pow10_neg(int k);

Rat rat_abs(const Rat& value);
Rat rat_pow(const Rat& base, long exponent);
Int factorial(unsigned n);
Int binomial(long n, long k);

}  // namespace dkap
