#pragma once

// Exact combinatorial kernels: Stirling numbers, partial Bell polynomials,
// integer compositions, degenerate falling factorials, and the coefficient
// sequences attached to theta(z) = log((1+z)/(1+qz)) and its inverse
// zeta(z) = (e^z - 1)/(1 - q e^z).

#include <functional>
#include <span>
#include <vector>

#include "dkap/errors.hpp"
#include "dkap/poly.hpp"
#include "dkap/scalar.hpp"
#include "dkap/series.hpp"

namespace dkap {

/// Ordered tuple of positive parts.
using Composition = std::vector<int>;

/// S(n, k); memoized, safe to call concurrently.
Rat stirling2(int n, int k);
/// Signed s(n, k) with (x)_n = sum_k s(n, k) x^k; memoized, safe to call concurrently.
Rat stirling1(int n, int k);

/// Visits every ordered m-tuple of positive integers summing to n, in
/// lexicographic order. (0, 0) yields one empty composition; m > n yields none.
void for_each_composition(int n, int m, const std::function<void(std::span<const int>)>& visit);
std::vector<Composition> compositions(int n, int m);

/// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}). `xs[j-1]` holds x_j.
/// Enumerates multiplicity vectors (i_1, ..., i_{n-k+1}) with sum i_j = k and
/// sum j i_j = n, each weighted by n! / prod(i_j! (j!)^{i_j}).
template <class R>
R bell_partial(int n, int k, std::span<const R> xs);

/// n-th derivative of phi(psi(t)) at t0: sum_k outer[k] B_{n,k}(inner[1..]).
/// outer[k] = phi^{(k)}(psi(t0)); inner[j] = psi^{(j)}(t0) (inner[0] unused).
template <class R>
R faa_derivative(std::span<const R> outer, std::span<const R> inner, int n);

/// (beta)_{k,lambda} = beta (beta - lambda) ... (beta - (k-1) lambda); 1 at k = 0.
template <class S>
S deg_falling(const S& beta, int k, const S& lambda) {
  require(k >= 0, "deg_falling: negative k");
  S acc(1);
  for (int j = 0; j < k; ++j) acc *= (beta - S(j) * lambda);
  return acc;
}

/// theta(z) = log(1+z) - log(1+qz) through z^order.
Series<Rat> theta_series(int order, const Rat& q);
/// zeta(z) = (e^z - 1) / (p - q (e^z - 1)), the compositional inverse of theta.
Series<Rat> zeta_series(int order, const Rat& q);

/// eta_k = k! [z^k] theta = (-1)^{k+1} (k-1)! (1 - q^k), eta_0 = 0.
Rat eta(int k, const Rat& q);
/// kappa_k = k! [z^k] zeta.
Rat kappa(int k, const Rat& q);

/// epsilon_k(x) = [t^k] ((1+t)/(1+qt))^x, from the Cauchy product of the two
/// binomial series.
XPoly epsilon(int k, const Rat& q);
/// sum_j (-1)^j binom(x, k-j) binom(x+j-1, k-j) q^j.
XPoly epsilon_printed(int k, const Rat& q);
/// sum_j (-1)^j binom(x, k-j) binom(x+j-1, j) q^j.
XPoly epsilon_binomial(int k, const Rat& q);

/// [y]_n = sum_k binom(n,k) q^k (y)_{n-k} (-y)_k, as a polynomial in y.
XPoly bracket_y(int n, const Rat& q);

/// varpi(m, n) = sum over compositions of n into m parts of
/// (-1)^{n+m} n! prod (1 - q^{i_j}) / i_j.
Rat varpi(int m, int n, const Rat& q);
/// varrho(m, k) = sum over compositions of k into m parts of
/// k! / (i_1! ... i_m!) prod kappa_{i_j}.
Rat varrho(int m, int k, const Rat& q);

enum class RhoVariant { literal, corrected };

/// Composition coefficient of the scaling expansion.
///   literal:   (-1)^{k+m} q^m k! sum prod 1/l_i
///   corrected: (-1)^{k+m} q^k r^m k! sum prod 1/l_i  (= k! [t^k] xi_q(t)^m)
Rat rho_scaling(int m, int k, const Rat& q, const Rat& r, RhoVariant variant);

// ---------------------------------------------------------------------------

namespace detail {

template <class R>
void bell_recurse(int j, int max_j, int remaining_k, int remaining_n, std::span<const R> xs,
                  const Rat& weight, const R& product, R& total) {
  if (remaining_k == 0 && remaining_n == 0) {
    total += product * RingTraits<R>::from_rat(weight);
    return;
  }
  if (j > max_j || remaining_k == 0 || remaining_n < j) return;
  const Rat jfact(factorial(static_cast<unsigned>(j)));
  R power = product;
  Rat w = weight;
  // Multiplicity i of part size j.
  for (int i = 0; i <= remaining_k && i * j <= remaining_n; ++i) {
    if (i > 0) {
      power = power * xs[static_cast<std::size_t>(j - 1)];
      w /= jfact * i;
    }
    bell_recurse(j + 1, max_j, remaining_k - i, remaining_n - i * j, xs, w, power, total);
  }
}

}  // namespace detail

template <class R>
R bell_partial(int n, int k, std::span<const R> xs) {
  require(n >= 0 && k >= 0, "bell_partial: negative index");
  if (k > n) return RingTraits<R>::zero();
  if (n == 0) return RingTraits<R>::one();  // k == 0 here
  if (k == 0) return RingTraits<R>::zero();
  const int needed = n - k + 1;
  require(static_cast<int>(xs.size()) >= needed, "bell_partial: insufficient arguments");
  R total = RingTraits<R>::zero();
  detail::bell_recurse(1, needed, k, n, xs, Rat(factorial(static_cast<unsigned>(n))),
                       RingTraits<R>::one(), total);
  return total;
}

template <class R>
R faa_derivative(std::span<const R> outer, std::span<const R> inner, int n) {
  require(n >= 0, "faa_derivative: negative order");
  require(static_cast<int>(outer.size()) >= n + 1, "faa_derivative: insufficient outer derivatives");
  require(static_cast<int>(inner.size()) >= n + 1, "faa_derivative: insufficient inner derivatives");
  if (n == 0) return outer[0];
  const auto args = inner.subspan(1);
  R total = RingTraits<R>::zero();
  for (int k = 1; k <= n; ++k) {
    total += outer[static_cast<std::size_t>(k)] * bell_partial<R>(n, k, args);
  }
  return total;
}

}  // namespace dkap
