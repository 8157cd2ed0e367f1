#pragma once

// The degenerate Pascal measure NB^(lambda)_{p,r}.
//
// Canonical reading: the mass at k is the k-th Taylor coefficient in w of
//   G(w) = e_lambda^beta(r log(p / (1 - q w))),   e_lambda^beta(z) = (1 + lambda z)^(beta/lambda),
// i.e. G is the probability generating function. This is the reading that
// agrees with the Laplace transform e_lambda^beta(r log(p / (1 - q e^z))),
// with the Gamma mixture of Pascal laws, and with normalization.
//
// The "literal" variants evaluate the closed forms
//   q^n / n! (beta)_{n,lambda} e_lambda^{beta - lambda n}(r log p)
// and the Stirling moment formula built on them; those do not sum to one
// and are kept for auditing.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dkap/params.hpp"
#include "dkap/scalar.hpp"
#include "dkap/series.hpp"

namespace dkap {

/// (1 + lambda z)^(beta/lambda); DomainError when 1 + lambda z <= 0.
Real deg_exp(const Real& z, const Rat& lambda, const Rat& beta);
inline Real deg_exp(const Real& z, const Params& params) {
  return deg_exp(z, params.lambda, params.beta);
}

/// e_lambda^beta(u(t)) as a series, for u(0) = 0.
template <class R>
Series<R> deg_exp_series(const Series<R>& u, const Rat& lambda, const Rat& beta) {
  require(RingTraits<R>::is_zero(u[0]), "deg_exp_series: argument must vanish at 0");
  Series<R> base = Series<R>(u).scale(RingTraits<R>::from_rat(lambda));
  base[0] = RingTraits<R>::one();
  if constexpr (std::is_same_v<R, Real>) {
    return series_fracpow(base, to_real(beta / lambda));
  } else {
    return series_fracpow(base, Rat(beta / lambda));
  }
}

/// p^r binom(-r, n) (-q)^n; exact when r is an integer, nullopt otherwise.
std::optional<Rat> classical_pmf_exact(int n, const Rat& p, const Rat& r);
/// Pascal pmf for real r > 0.
Real classical_pmf(int n, const Real& p, const Real& r);

/// Exact Taylor expansion of the Laplace transform around z = 0, using
///   r log(p / (1 - q e^z)) = -r log(1 - (q/p)(e^z - 1)).
Series<Rat> laplace_series(const Params& params, int order);

/// m-th moment of the canonical measure, m! [z^m] laplace_series.
Rat moment_exact(int m, const Params& params);
/// Moments 0..m_max.
std::vector<Rat> moments_exact(int m_max, const Params& params);

/// Gamma(shape -beta/lambda, scale -lambda) density; DomainError for s <= 0.
Real mixture_density(const Real& s, const Params& params);

/// A parameter set bound to a working precision, with the canonical pmf
/// tabulated out to an adaptively chosen cutoff. Immutable after construction.
class MeasureModel {
 public:
  /// `moment_power` is the largest m for which sum_{n>cutoff} n^m pmf(n) must
  /// stay below 10^(-digits/2).
  explicit MeasureModel(const Params& params, unsigned digits = kDefaultDigits,
                        int moment_power = 8);

  const Params& params() const { return params_; }
  unsigned digits() const { return digits_; }
  int cutoff() const { return cutoff_; }
  /// 10^(-digits/2).
  Real tail_tolerance() const;

  /// Radius of convergence of the pmf generating function.
  Real singularity() const;

  /// Smallest N with sum_{n>N} n^power growth^n pmf(n) <= tol, from the
  /// Cauchy bound pmf(n) <= G(R) R^{-n} for growth < R < singularity().
  int cutoff_for(int power, const Real& growth, const Real& tol) const;

  Real canonical_pmf(int n) const;
  /// pmf(0..count-1) from the series of the generating function.
  std::vector<Real> canonical_pmf_values(int count) const;
  std::span<const Real> pmf_table() const { return pmf_; }
  /// Same quantity via Faa di Bruno over partial Bell polynomials.
  Real canonical_pmf_bell(int n) const;

  Real literal_pmf(int n) const;
  /// Closed form (1 + lambda (r log p + q))^(beta/lambda) of sum_n literal_pmf(n).
  Real literal_total_mass() const;
  /// sum_n n^m literal_pmf(n), truncated once the tail is below tolerance.
  Real literal_power_sum(int m) const;
  /// Stirling-number closed form for the m-th literal moment, m >= 1.
  Real literal_moment(int m) const;

  /// e_lambda^beta(r log(p / (1 - q e^z))); DomainError when q e^z >= 1.
  Real laplace(const Real& z) const;
  /// sum_{n <= cutoff} e^{z n} pmf(n).
  Real laplace_truncated_sum(const Real& z) const;
  /// sum_{n <= cutoff} n^m pmf(n).
  Real moment_truncated_sum(int m) const;

  /// Numerical integral of f against the mixing density on (0, inf).
  Real mixture_integral(const std::function<Real(const Real&)>& f) const;
  /// Integral of the Pascal(p, r s) mass at n against the mixing density.
  Real mixture_pmf(int n) const;
  /// Integral of e^{-s x} against the mixing density in x.
  Real mixture_laplace(const Real& s) const;

  /// E[Psi(s, X) Psi(t, X)] in closed form.
  Real joint_laplace(const Real& s, const Real& t) const;
  /// Same expectation as a truncated sum over the pmf.
  Real joint_laplace_sum(const Real& s, const Real& t) const;

 private:
  [[nodiscard]] ScopedPrecision guard() const { return ScopedPrecision(digits_); }
  Real log_generating_bound(const Real& radius) const;

  Params params_;
  unsigned digits_;
  Real lambda_, beta_, p_, q_, r_;
  Real exponent_;     // beta / lambda
  Real base_;         // 1 + lambda r log p
  Real gamma_norm_;   // Gamma(-beta/lambda) (-lambda)^(-beta/lambda)
  int cutoff_ = 0;
  std::vector<Real> pmf_;
};

/// Histogram comparison of a sample against the canonical pmf.
struct SampleSummary {
  long count = 0;
  std::vector<long> frequencies;  // index n = observed value, up to max(sample, cutoff)
  double mean = 0;
  double standard_error = 0;
  double total_variation = 0;
};

/// Draws S ~ Gamma(-beta/lambda, scale -lambda), L | S ~ Gamma(r S, scale q/p),
/// X | L ~ Poisson(L). Deterministic for a given (seed, count).
std::vector<long> sample(long count, std::uint64_t seed, const Params& params);

SampleSummary summarize(std::span<const long> draws, const MeasureModel& model);

}  // namespace dkap
