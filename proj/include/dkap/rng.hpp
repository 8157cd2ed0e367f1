#pragma once

#include <cstdint>
#include <random>

namespace dkap {

/// Independent, seedable random stream. The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; all conversions to floating point
/// and all variate generators are implemented here rather than taken from
/// <random>, so draws are identical across standard library implementations.
///
/// Stream seeds are splitmix64(seed + stream * golden-ratio constant).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  /// Uniform on the open interval (0, 1), 53 random bits.
  double uniform();
  /// Standard normal, Marsaglia polar method (second variate discarded).
  double normal();
  /// Gamma(shape, scale): Marsaglia-Tsang squeeze for shape >= 1, boosted by
  /// U^(1/shape) below 1.
  double gamma(double shape, double scale);
  /// Poisson(mean): sequential inversion below mean 30, Hormann's PTRS
  /// transformed rejection above.
  long poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace dkap
