#include "dkap/appell.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "dkap/combinatorics.hpp"
#include "dkap/pascal_measure.hpp"

namespace dkap {
namespace {

constexpr std::array<std::pair<Route, std::string_view>, 11> kRouteNames{{
    {Route::series, "series"},
    {Route::epsilon, "epsilon"},
    {Route::from_p, "from-p"},
    {Route::stirling1, "stirling1"},
    {Route::bell_corrected, "bell"},
    {Route::bell_literal, "bell-literal"},
    {Route::p_series, "p-series"},
    {Route::p_bell, "p-bell"},
    {Route::p_from_k, "p-from-k"},
    {Route::p_stirling2, "p-stirling2"},
    {Route::classical, "classical"},
}};

Rat fact(int n) { return Rat(factorial(static_cast<unsigned>(n))); }
Rat binom(int n, int k) { return Rat(binomial(n, k)); }

std::vector<XPoly> egf_members(const Series<XPoly>& s, int n_max) {
  std::vector<XPoly> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(s[n] * fact(n));
  return out;
}

XPoly x_power(int n) { return XPoly::monomial(n); }

}  // namespace

std::string_view route_name(Route route) {
  for (const auto& [r, name] : kRouteNames) {
    if (r == route) return name;
  }
  return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
  for (const auto& [r, n] : kRouteNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::optional<int> first_mismatch(const PolyFamily& a, const PolyFamily& b) {
  const int n = std::min(a.n_max(), b.n_max());
  for (int k = 0; k <= n; ++k) {
    if (!(a[k] == b[k])) return k;
  }
  return std::nullopt;
}

Rat max_residual(const PolyFamily& a, const PolyFamily& b) {
  const int n = std::min(a.n_max(), b.n_max());
  Rat worst(0);
  for (int k = 0; k <= n; ++k) worst = std::max(worst, max_abs_coeff(a[k] - b[k]));
  return worst;
}

std::vector<Rat> xi_derivs(int n_max, const Params& params) {
  require(n_max >= 0, "xi_derivs: negative order");
  std::vector<Rat> xi(static_cast<std::size_t>(n_max) + 1, Rat(0));
  for (int m = 1; m <= n_max; ++m) {
    const Rat sign = (m % 2 == 1) ? Rat(1) : Rat(-1);
    xi[static_cast<std::size_t>(m)] = params.r * sign * fact(m - 1) * rat_pow(params.q, m);
  }
  return xi;
}

Series<Rat> xi_series(int order, const Params& params) {
  return log1p_linear(order, params.q).scale(params.r);
}

std::vector<Rat> mu_coeffs(int n_max, const Params& params) {
  const std::vector<Rat> inner = xi_derivs(n_max, params);
  std::vector<Rat> outer;
  outer.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int j = 0; j <= n_max; ++j) outer.push_back(deg_falling(params.beta, j, params.lambda));
  std::vector<Rat> mu;
  mu.reserve(outer.size());
  for (int k = 0; k <= n_max; ++k) mu.push_back(faa_derivative<Rat>(outer, inner, k));
  return mu;
}

std::vector<Rat> mu_coeffs_series(int n_max, const Params& params) {
  return egf_coeffs(deg_exp_series(xi_series(n_max, params), params.lambda, params.beta));
}

std::vector<Rat> c_coeffs(int n_max, const Params& params) {
  const std::vector<Rat> mu = mu_coeffs(n_max, params);
  std::vector<Rat> c(static_cast<std::size_t>(n_max) + 1, Rat(0));
  c[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Rat acc(0);
    for (int i = 1; i <= n; ++i) {
      acc += binom(n, i) / rat_pow(params.r, i) * mu[static_cast<std::size_t>(i)] *
             c[static_cast<std::size_t>(n - i)];
    }
    c[static_cast<std::size_t>(n)] = -acc;
  }
  return c;
}

std::vector<Rat> c_coeffs_series(int n_max, const Params& params) {
  const Series<Rat> g = deg_exp_series(xi_series(n_max, params), params.lambda, params.beta);
  std::vector<Rat> c = egf_coeffs(series_reciprocal(g));
  for (int n = 0; n <= n_max; ++n) c[static_cast<std::size_t>(n)] /= rat_pow(params.r, n);
  return c;
}

CoeffTable coeff_table(int n_max, const Params& params) {
  return {c_coeffs(n_max, params), mu_coeffs(n_max, params), xi_derivs(n_max, params)};
}

Series<XPoly> k_generating_series(const Params& params, int order) {
  const XPoly x = XPoly::x();
  const Series<XPoly> omega_x =
      binomial_series(order, x, Rat(1)) * binomial_series(order, -x, params.q);
  const Series<Rat> g = deg_exp_series(xi_series(order, params), params.lambda, params.beta);
  return omega_x * to_poly_series(series_reciprocal(g));
}

Series<XPoly> p_generating_series(const Params& params, int order) {
  Series<XPoly> exz(order);
  for (int n = 0; n <= order; ++n) exz[n] = x_power(n) / fact(n);
  return exz * to_poly_series(series_reciprocal(laplace_series(params, order)));
}

PolyFamily K_series(int n_max, const Params& params, int order) {
  require(n_max >= 0, "K_series: negative n_max");
  require(n_max <= order - 2, "K_series: n_max must not exceed series order - 2");
  return {Route::series, egf_members(k_generating_series(params, order), n_max)};
}

PolyFamily K_epsilon(int n_max, const Params& params) {
  require(n_max >= 0, "K_epsilon: negative n_max");
  const std::vector<Rat> c = c_coeffs(n_max, params);
  std::vector<XPoly> eps;
  for (int k = 0; k <= n_max; ++k) eps.push_back(epsilon(k, params.q));
  PolyFamily out{Route::epsilon, {}};
  for (int n = 0; n <= n_max; ++n) {
    XPoly kn;
    for (int k = 0; k <= n; ++k) {
      const Rat w = fact(n) / fact(n - k) * rat_pow(params.r, n - k) * c[static_cast<std::size_t>(n - k)];
      kn += eps[static_cast<std::size_t>(k)] * w;
    }
    out.members.push_back(std::move(kn));
  }
  return out;
}

PolyFamily P_series(int n_max, const Params& params, int order) {
  require(n_max >= 0, "P_series: negative n_max");
  require(n_max <= order - 2, "P_series: n_max must not exceed series order - 2");
  return {Route::p_series, egf_members(p_generating_series(params, order), n_max)};
}

Rat reciprocal_derivative(int n, const std::vector<Rat>& args) {
  require(n >= 0, "reciprocal_derivative: negative order");
  if (n == 0) return Rat(1);
  Rat total(0);
  for (int i = 1; i <= n; ++i) {
    const Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
    total += sign * fact(i) * bell_partial<Rat>(n, i, args);
  }
  return total;
}

PolyFamily P_bell(int n_max, const Params& params) {
  require(n_max >= 0, "P_bell: negative n_max");
  const std::vector<Rat> moments = moments_exact(std::max(n_max, 1), params);
  const std::vector<Rat> args(moments.begin() + 1, moments.end());
  std::vector<Rat> recip;
  for (int j = 0; j <= n_max; ++j) recip.push_back(reciprocal_derivative(j, args));
  PolyFamily out{Route::p_bell, {}};
  for (int n = 0; n <= n_max; ++n) {
    XPoly pn;
    for (int k = 0; k <= n; ++k) pn += x_power(k) * (binom(n, k) * recip[static_cast<std::size_t>(n - k)]);
    out.members.push_back(std::move(pn));
  }
  return out;
}

PolyFamily K_from_P(const PolyFamily& p_family, const Params& params) {
  PolyFamily out{Route::from_p, {}};
  for (int n = 0; n <= p_family.n_max(); ++n) {
    XPoly kn;
    for (int m = 0; m <= n; ++m) kn += p_family[m] * (varpi(m, n, params.q) / fact(m));
    out.members.push_back(std::move(kn));
  }
  return out;
}

PolyFamily P_from_K(const PolyFamily& k_family, const Params& params) {
  PolyFamily out{Route::p_from_k, {}};
  for (int n = 0; n <= k_family.n_max(); ++n) {
    XPoly pn;
    for (int m = 0; m <= n; ++m) pn += k_family[m] * (varrho(m, n, params.q) / fact(m));
    out.members.push_back(std::move(pn));
  }
  return out;
}

XPoly monomial_from_K(int n, const PolyFamily& k_family, const Params& params) {
  require(n >= 0 && n <= k_family.n_max(), "monomial_from_K: index out of range");
  const std::vector<Rat> moments = moments_exact(n, params);
  XPoly out;
  for (int k = 0; k <= n; ++k) {
    const Rat outer = binom(n, k) * moments[static_cast<std::size_t>(n - k)];
    for (int m = 0; m <= k; ++m) {
      out += k_family[m] * (outer * varrho(m, k, params.q) / fact(m));
    }
  }
  return out;
}

XYPoly addition_P3(int n, const PolyFamily& k_family, const Params& params, P3Variant variant) {
  require(n >= 0 && n <= k_family.n_max(), "addition_P3: index out of range");
  const std::vector<Rat> mu = mu_coeffs(n, params);
  XYPoly rhs;
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; k + l <= n; ++l) {
      const int m = n - k - l;
      const Rat w = fact(n) / (fact(k) * fact(l) * fact(m)) * mu[static_cast<std::size_t>(m)];
      const XYPoly second = variant == P3Variant::corrected ? XYPoly::from_y(k_family[l])
                                                            : XYPoly::from_x(k_family[l]);
      rhs += XYPoly::from_x(k_family[k]) * second * w;
    }
  }
  return XYPoly::sum_substitution(k_family[n]) - rhs;
}

XYPoly addition_P4(int n, const PolyFamily& k_family, const Params& params) {
  require(n >= 0 && n <= k_family.n_max(), "addition_P4: index out of range");
  XYPoly rhs;
  for (int k = 0; k <= n; ++k) {
    rhs += XYPoly::from_x(k_family[k]) * XYPoly::from_y(bracket_y(n - k, params.q)) * binom(n, k);
  }
  return XYPoly::sum_substitution(k_family[n]) - rhs;
}

Rat theta_power_coeff(int n, int k, const Rat& q, StirlingBounds bounds) {
  require(n >= 0 && k >= 0, "theta_power_coeff: negative index");
  if (bounds == StirlingBounds::oracle) {
    const Series<Rat> power = series_pow(theta_series(n, q), k);
    return power[n] * fact(n) / fact(k);
  }
  Rat total(0);
  for (int j = 0; j <= k; ++j) {
    const int upper = bounds == StirlingBounds::full ? n - k + j : n - k - j;
    Rat inner(0);
    for (int m = j; m <= upper; ++m) {
      inner += binom(n, m) * stirling1(m, j) * stirling1(n - m, k - j) * rat_pow(q, n - m);
    }
    total += ((k - j) % 2 == 0 ? inner : -inner);
  }
  return total;
}

PolyFamily K_stirling(const PolyFamily& p_family, const Params& params, StirlingBounds bounds) {
  PolyFamily out{Route::stirling1, {}};
  for (int n = 0; n <= p_family.n_max(); ++n) {
    XPoly kn;
    for (int k = 0; k <= n; ++k) kn += p_family[k] * theta_power_coeff(n, k, params.q, bounds);
    out.members.push_back(std::move(kn));
  }
  return out;
}

PolyFamily P_from_K_stirling2(const PolyFamily& k_family, const Params& params) {
  PolyFamily out{Route::p_stirling2, {}};
  for (int n = 0; n <= k_family.n_max(); ++n) {
    XPoly pn = n == 0 ? k_family[0] : XPoly();
    for (int k = 1; k <= n; ++k) {
      Rat w(0);
      for (int j = k; j <= n; ++j) {
        w += binom(j - 1, k - 1) * rat_pow(params.q, j - k) / rat_pow(params.p, j) * fact(j) *
             stirling2(n, j);
      }
      pn += k_family[k] * (w / fact(k));
    }
    out.members.push_back(std::move(pn));
  }
  return out;
}

PolyFamily K_bell(int n_max, const Params& params, BellVariant variant) {
  require(n_max >= 0, "K_bell: negative n_max");
  std::vector<Rat> source = variant == BellVariant::corrected
                                ? mu_coeffs(std::max(n_max, 1), params)
                                : moments_exact(std::max(n_max, 1), params);
  const std::vector<Rat> args(source.begin() + 1, source.end());
  std::vector<Rat> recip;
  std::vector<XPoly> brackets;
  for (int j = 0; j <= n_max; ++j) {
    recip.push_back(reciprocal_derivative(j, args));
    brackets.push_back(bracket_y(j, params.q));
  }
  PolyFamily out{variant == BellVariant::corrected ? Route::bell_corrected : Route::bell_literal, {}};
  for (int n = 0; n <= n_max; ++n) {
    XPoly kn;
    for (int k = 0; k <= n; ++k) {
      kn += brackets[static_cast<std::size_t>(k)] * (binom(n, k) * recip[static_cast<std::size_t>(n - k)]);
    }
    out.members.push_back(std::move(kn));
  }
  return out;
}

PolyFamily classical_K(int n_max, const Rat& p, const Rat& r, int order) {
  require(n_max >= 0 && n_max <= order, "classical_K: n_max out of range");
  const XPoly x = XPoly::x();
  const Rat q = Rat(1) - p;
  const Series<XPoly> gen =
      binomial_series(order, x, Rat(1)) * binomial_series(order, -x - XPoly(r), q);
  return {Route::classical, egf_members(gen, n_max)};
}

}  // namespace dkap
