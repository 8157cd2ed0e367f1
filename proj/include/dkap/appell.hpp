#pragma once

// Degenerate Krawtchouk Appell polynomials K_n and the companion Appell
// family P_n of the degenerate Pascal measure.
//
// Canonical definitions (everything else is checked against these):
//   sum_n K_n(x) t^n / n! = ((1+t)/(1+qt))^x / e_lambda^beta(r log(1+qt))
//   sum_n P_n(x) z^n / n! = e^{xz} / L(z),   L = Laplace transform of the measure
//
// Each family is also assembled along the independent routes below, and the
// combinatorial identities linking K and P are exposed as residual evaluators.

#include <optional>
#include <string_view>
#include <vector>

#include "dkap/params.hpp"
#include "dkap/poly.hpp"
#include "dkap/series.hpp"

namespace dkap {

inline constexpr int kDefaultSeriesOrder = 16;

enum class Route {
  series,          // K from its generating series
  epsilon,         // K from epsilon_k and the c_n recurrence
  from_p,          // K from P via varpi
  stirling1,       // K from P via k! [z^n] theta^k / k!  (series power)
  bell_corrected,  // K from Bell polynomials in mu_j
  bell_literal,    // same with the moments M(j) in place of mu_j
  p_series,        // P from e^{xz}/L(z)
  p_bell,          // P from Bell polynomials in the moments
  p_from_k,        // P from K via varrho
  p_stirling2,     // P from K via Stirling numbers of the second kind
  classical,       // classical Krawtchouk polynomials (1+t)^x (1+qt)^(-x-r)
};

std::string_view route_name(Route route);
std::optional<Route> parse_route(std::string_view name);

struct PolyFamily {
  Route route = Route::series;
  std::vector<XPoly> members;

  int n_max() const { return static_cast<int>(members.size()) - 1; }
  const XPoly& operator[](int n) const { return members.at(static_cast<std::size_t>(n)); }
};

/// Index of the first member where the families differ, or nullopt when they
/// agree through min(n_max).
std::optional<int> first_mismatch(const PolyFamily& a, const PolyFamily& b);
/// Largest |coefficient| of a_n - b_n over the common range.
Rat max_residual(const PolyFamily& a, const PolyFamily& b);

/// c_n(r), mu_k = (e_lambda^beta o xi_q)^{(k)}(0) and xi_q^{(m)}(0).
struct CoeffTable {
  std::vector<Rat> c;
  std::vector<Rat> mu;
  std::vector<Rat> xi;
};

/// xi_q^{(m)}(0) = r (-1)^{m-1} (m-1)! q^m for m >= 1, 0 at m = 0.
std::vector<Rat> xi_derivs(int n_max, const Params& params);
/// xi_q(t) = r log(1 + q t).
Series<Rat> xi_series(int order, const Params& params);
/// mu_k by Faa di Bruno with outer derivatives (beta)_{j,lambda}.
std::vector<Rat> mu_coeffs(int n_max, const Params& params);
/// mu_k as k! [t^k] e_lambda^beta(xi_q(t)).
std::vector<Rat> mu_coeffs_series(int n_max, const Params& params);
/// c_0 = 1, c_n = -sum_{i=1}^n binom(n,i) r^{-i} mu_i c_{n-i}.
std::vector<Rat> c_coeffs(int n_max, const Params& params);
/// c_n = n! r^{-n} [t^n] 1/e_lambda^beta(xi_q(t)).
std::vector<Rat> c_coeffs_series(int n_max, const Params& params);
CoeffTable coeff_table(int n_max, const Params& params);

/// Psi(t, x) as a series in t with polynomial coefficients.
Series<XPoly> k_generating_series(const Params& params, int order);
/// e^{xz} / L(z) as a series in z with polynomial coefficients.
Series<XPoly> p_generating_series(const Params& params, int order);

PolyFamily K_series(int n_max, const Params& params, int order = kDefaultSeriesOrder);
PolyFamily K_epsilon(int n_max, const Params& params);
PolyFamily P_series(int n_max, const Params& params, int order = kDefaultSeriesOrder);
PolyFamily P_bell(int n_max, const Params& params);

/// K_n = sum_m varpi(m, n)/m! P_m.
PolyFamily K_from_P(const PolyFamily& p_family, const Params& params);
/// P_n = sum_m varrho(m, n)/m! K_m.
PolyFamily P_from_K(const PolyFamily& k_family, const Params& params);

/// sum_k sum_m binom(n,k) varrho(m,k)/m! K_m(x) M(n-k); equals x^n.
XPoly monomial_from_K(int n, const PolyFamily& k_family, const Params& params);

enum class P3Variant { corrected, literal };
/// K_n(x+y) - sum_{k+l+m=n} n!/(k! l! m!) K_k(x) K_l(.) mu_m with K_l(y)
/// (corrected) or K_l(x) (literal).
XYPoly addition_P3(int n, const PolyFamily& k_family, const Params& params, P3Variant variant);
/// K_n(x+y) - sum_k binom(n,k) K_k(x) [y]_{n-k}.
XYPoly addition_P4(int n, const PolyFamily& k_family, const Params& params);

enum class StirlingBounds {
  oracle,   // n! [z^n] theta(z)^k / k! from series arithmetic
  full,     // triple sum with m running over j..n-k+j
  printed,  // triple sum with m running over j..n-k-j
};
/// n! [z^n] theta^k / k! along the chosen route.
Rat theta_power_coeff(int n, int k, const Rat& q, StirlingBounds bounds);
/// K_n = sum_k theta_power_coeff(n, k) P_k.
PolyFamily K_stirling(const PolyFamily& p_family, const Params& params, StirlingBounds bounds);

/// P_n = sum_k [sum_{j=k}^n binom(j-1,k-1) q^{j-k} / p^j j! S(n,j)] K_k / k!.
PolyFamily P_from_K_stirling2(const PolyFamily& k_family, const Params& params);

enum class BellVariant { corrected, literal };
/// K_n = sum_k binom(n,k) [sum_i (-1)^i i! B_{n-k,i}(args)] [x]_k, where args
/// are mu_j (corrected) or the moments M(j) (literal).
PolyFamily K_bell(int n_max, const Params& params, BellVariant variant);
/// sum_j (-1)^j j! B_{n,j}(args_1, ...), the value at zero of the reciprocal.
Rat reciprocal_derivative(int n, const std::vector<Rat>& args);

/// Classical Krawtchouk polynomials n! [t^n] (1+t)^x (1+qt)^(-x-r).
PolyFamily classical_K(int n_max, const Rat& p, const Rat& r, int order = kDefaultSeriesOrder);

}  // namespace dkap
