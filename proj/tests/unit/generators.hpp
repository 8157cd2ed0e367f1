#pragma once

// Seeded generators for the property tests. Every test draws from its own
// fixed seed so failures reproduce exactly.

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "dkap/params.hpp"
#include "dkap/poly.hpp"
#include "dkap/scalar.hpp"
#include "dkap/series.hpp"

namespace dkap {

inline void PrintTo(const XPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const Rat& v, std::ostream* os) { *os << to_string(v); }

}  // namespace dkap

namespace dkap::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

  Rat rational(long max_num = 9, long max_den = 7) {
    return Rat(integer(-max_num, max_num), integer(1, max_den));
  }
  Rat nonzero_rational(long max_num = 9, long max_den = 7) {
    for (;;) {
      Rat v = rational(max_num, max_den);
      if (v != 0) return v;
    }
  }
  Rat positive_rational(long max_num = 9, long max_den = 7) {
    return Rat(integer(1, max_num), integer(1, max_den));
  }

  XPoly poly(int max_degree) {
    std::vector<Rat> c;
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= deg; ++i) c.push_back(rational());
    return XPoly(std::move(c));
  }

  Series<Rat> series(int order, bool unit_constant = false) {
    Series<Rat> s(order);
    for (int k = 0; k <= order; ++k) s[k] = rational();
    if (unit_constant) s[0] = 1;
    return s;
  }

  /// lambda < 0, beta > 0, 0 < p < 1, r > 0 with small denominators.
  Params params() {
    const Rat lambda(-integer(1, 6), integer(1, 6));
    const Rat beta(integer(1, 6), integer(1, 4));
    const long den = integer(2, 10);
    const Rat p(integer(1, den - 1), den);
    const Rat r(integer(1, 8), integer(1, 3));
    return Params::make(lambda, beta, p, r);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline Params set_a() { return Params::make(Rat(-1, 2), Rat(2), Rat(3, 5), Rat(3)); }
inline Params set_b() { return Params::make(Rat(-1), Rat(1, 2), Rat(1, 2), Rat(1)); }
inline Params set_c() { return Params::make(Rat(-1, 4), Rat(3), Rat(7, 10), Rat(5, 2)); }
inline std::vector<Params> acceptance_sets() { return {set_a(), set_b(), set_c()}; }

}  // namespace dkap::testing
