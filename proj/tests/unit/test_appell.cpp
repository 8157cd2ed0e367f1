#include <gtest/gtest.h>

#include "dkap/appell.hpp"
#include "dkap/combinatorics.hpp"
#include "dkap/pascal_measure.hpp"
#include "generators.hpp"

namespace dkap {
namespace {

using testing::Gen;

XPoly linear(const Rat& c0, const Rat& c1) { return XPoly(std::vector<Rat>{c0, c1}); }

void expect_same(const PolyFamily& a, const PolyFamily& b, int n_max) {
  ASSERT_GE(a.n_max(), n_max);
  ASSERT_GE(b.n_max(), n_max);
  for (int n = 0; n <= n_max; ++n) EXPECT_EQ(a[n], b[n]) << route_name(a.route) << " vs " << route_name(b.route) << " n=" << n;
}

class AppellSets : public ::testing::TestWithParam<int> {
 protected:
  Params params() const { return testing::acceptance_sets()[static_cast<std::size_t>(GetParam())]; }
};

TEST(Coefficients, XiDerivatives) {
  const Params pr = testing::set_c();
  const auto xi = xi_derivs(10, pr);
  EXPECT_EQ(xi[0], 0);
  EXPECT_EQ(xi[1], pr.r * pr.q);
  EXPECT_EQ(xi[2], -pr.r * pr.q * pr.q);
  EXPECT_EQ(xi, egf_coeffs(xi_series(10, pr)));
}

TEST(Coefficients, MuBothRoutes) {
  Gen gen(501);
  for (int trial = 0; trial < 8; ++trial) {
    const Params pr = gen.params();
    const auto mu = mu_coeffs(10, pr);
    EXPECT_EQ(mu[0], 1);
    EXPECT_EQ(mu[1], pr.beta * pr.r * pr.q);
    EXPECT_EQ(mu, mu_coeffs_series(10, pr));
  }
}

TEST(Coefficients, CRecurrenceBothRoutes) {
  Gen gen(502);
  for (int trial = 0; trial < 8; ++trial) {
    const Params pr = gen.params();
    const auto c = c_coeffs(10, pr);
    const Rat q = pr.q, b = pr.beta, l = pr.lambda;
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], -q * b);
    EXPECT_EQ(c[2], 2 * q * q * b * b - (b - l) * b * q * q + b * q * q / pr.r);
    EXPECT_EQ(c, c_coeffs_series(10, pr));
    const CoeffTable table = coeff_table(6, pr);
    EXPECT_EQ(table.c[0], 1);
    EXPECT_EQ(table.mu[0], 1);
    EXPECT_EQ(table.xi.size(), 7u);
  }
}

TEST(Routes, NamesRoundTrip) {
  for (Route r : {Route::series, Route::epsilon, Route::from_p, Route::stirling1, Route::bell_corrected,
                  Route::bell_literal, Route::p_series, Route::p_bell, Route::p_from_k, Route::p_stirling2,
                  Route::classical}) {
    EXPECT_EQ(parse_route(route_name(r)), r);
  }
  EXPECT_FALSE(parse_route("nonsense").has_value());
}

TEST(KSeries, FirstMembers) {
  const Params pr = testing::set_a();
  const PolyFamily k = K_series(4, pr);
  EXPECT_EQ(k[0], XPoly(Rat(1)));
  EXPECT_EQ(k[1], linear(-pr.beta * pr.r * pr.q, pr.p));
  const auto c = c_coeffs(2, pr);
  EXPECT_EQ(k[1], XPoly(pr.r * c[1]) + epsilon(1, pr.q));
  EXPECT_THROW(K_series(15, pr, 16), ContractViolation);
}

TEST(KSeries, GeneratingFunctionRegression) {
  const Params pr = testing::set_b();
  const int order = 12;
  const PolyFamily k = K_series(10, pr, order);
  const Series<XPoly> psi = k_generating_series(pr, order);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(k[n] / Rat(factorial(static_cast<unsigned>(n))), psi[n]);
}

TEST(KSeries, IntegerArgumentOracle) {
  // At x = m, Psi(t, m) is an explicit product of rational series.
  const Params pr = testing::set_a();
  const int order = 10;
  const PolyFamily k = K_series(8, pr, order);
  const Series<Rat> g = deg_exp_series(xi_series(order, pr), pr.lambda, pr.beta);
  for (int m = 0; m <= 4; ++m) {
    Series<Rat> num = Series<Rat>::unit(order), den = Series<Rat>::unit(order);
    num[1] = 1;
    den[1] = pr.q;
    const Series<Rat> psi =
        series_mul(series_mul(series_pow(num, m), series_reciprocal(series_pow(den, m))), series_reciprocal(g));
    const auto coeffs = egf_coeffs(psi);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(k[n](Rat(m)), coeffs[static_cast<std::size_t>(n)]);
  }
}

TEST_P(AppellSets, KRoutesAgree) {
  const Params pr = params();
  const int n = 10;
  const PolyFamily ks = K_series(n, pr, n + 2);
  expect_same(ks, K_epsilon(n, pr), n);
  const PolyFamily ps = P_series(n, pr, n + 2);
  expect_same(ks, K_from_P(ps, pr), n);
  expect_same(ks, K_bell(n, pr, BellVariant::corrected), n);
  expect_same(ks, K_stirling(ps, pr, StirlingBounds::oracle), n);
  expect_same(ks, K_stirling(ps, pr, StirlingBounds::full), n);
}

TEST_P(AppellSets, PRoutesAgree) {
  const Params pr = params();
  const int n = 8;
  const PolyFamily ps = P_series(n, pr, n + 2);
  const PolyFamily ks = K_series(n, pr, n + 2);
  expect_same(ps, P_bell(n, pr), n);
  expect_same(ps, P_from_K(ks, pr), n);
  expect_same(ps, P_from_K_stirling2(ks, pr), n);
  expect_same(ks, K_from_P(P_from_K(ks, pr), pr), n);
}

TEST_P(AppellSets, AppellPropertyAndLeadingCoefficient) {
  const Params pr = params();
  const PolyFamily ks = K_series(12, pr, 14);
  const PolyFamily ps = P_series(12, pr, 14);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(ks[n].degree(), n);
    EXPECT_EQ(ps[n].degree(), n);
    EXPECT_EQ(ks[n].leading(), rat_pow(pr.p, n));
    EXPECT_EQ(ps[n].leading(), 1);
    if (n >= 1) EXPECT_EQ(derivative(ps[n]), ps[n - 1] * n);
    // K is generated by e^{x theta(t)} / g(t), so d/dx multiplies the
    // generating function by theta(t) rather than by t.
    XPoly sheffer;
    for (int j = 1; j <= n; ++j) sheffer += ks[n - j] * (Rat(binomial(n, j)) * eta(j, pr.q));
    EXPECT_EQ(derivative(ks[n]), sheffer);
    if (n >= 1) EXPECT_NE(derivative(ks[n]), ks[n - 1] * n);
  }
  EXPECT_EQ(ps[1], linear(-pr.beta * pr.r * pr.q / pr.p, Rat(1)));
}

TEST_P(AppellSets, MonomialReconstruction) {
  const Params pr = params();
  const PolyFamily ks = K_series(10, pr, 12);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(monomial_from_K(n, ks, pr), XPoly::monomial(n));
}

TEST_P(AppellSets, AdditionFormulas) {
  const Params pr = params();
  const PolyFamily ks = K_series(10, pr, 12);
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(addition_P3(n, ks, pr, P3Variant::corrected).is_zero()) << "n=" << n;
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(addition_P4(n, ks, pr).is_zero()) << "n=" << n;
  EXPECT_TRUE(addition_P3(0, ks, pr, P3Variant::literal).is_zero());
  EXPECT_FALSE(addition_P3(1, ks, pr, P3Variant::literal).is_zero());
}

TEST_P(AppellSets, LiteralVariantsDiffer) {
  const Params pr = params();
  const int n = 6;
  const PolyFamily ks = K_series(n, pr, n + 2);
  const PolyFamily ps = P_series(n, pr, n + 2);
  EXPECT_TRUE(first_mismatch(ks, K_bell(n, pr, BellVariant::literal)).has_value());
  EXPECT_EQ(first_mismatch(ks, K_stirling(ps, pr, StirlingBounds::printed)), std::optional<int>(1));
  EXPECT_GT(max_residual(ks, K_bell(n, pr, BellVariant::literal)), 0);
  EXPECT_EQ(max_residual(ks, K_epsilon(n, pr)), 0);
}

INSTANTIATE_TEST_SUITE_P(AcceptanceSets, AppellSets, ::testing::Values(0, 1, 2));

TEST(Routes, RandomParameterProperty) {
  Gen gen(503);
  for (int trial = 0; trial < 6; ++trial) {
    const Params pr = gen.params();
    const int n = 7;
    const PolyFamily ks = K_series(n, pr, n + 2);
    const PolyFamily ps = P_series(n, pr, n + 2);
    expect_same(ks, K_epsilon(n, pr), n);
    expect_same(ks, K_bell(n, pr, BellVariant::corrected), n);
    expect_same(ps, P_from_K(ks, pr), n);
    expect_same(ps, P_from_K_stirling2(ks, pr), n);
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(addition_P4(k, ks, pr).is_zero());
  }
}

TEST(Stirling1Route, CoefficientOracle) {
  const Rat q(3, 7);
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(theta_power_coeff(n, k, q, StirlingBounds::full), theta_power_coeff(n, k, q, StirlingBounds::oracle));
      EXPECT_EQ(theta_power_coeff(n, k, q, StirlingBounds::oracle), varpi(k, n, q) / Rat(factorial(static_cast<unsigned>(k))));
    }
  }
}

TEST(Stirling2Route, LeadingTerm) {
  // The k = n weight reduces to 1/p^n.
  const Params pr = testing::set_a();
  const PolyFamily ks = K_series(5, pr, 7);
  const PolyFamily ps = P_from_K_stirling2(ks, pr);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(ps[n].leading(), ks[n].leading() / rat_pow(pr.p, n));
}

TEST(BellRoute, ValueAtZero) {
  const Params pr = testing::set_b();
  const auto moments = moments_exact(10, pr);
  const std::vector<Rat> args(moments.begin() + 1, moments.end());
  const PolyFamily ps = P_series(10, pr, 12);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(reciprocal_derivative(n, args), ps[n](Rat(0)));
}

TEST(Classical, FirstMembersAndLimit) {
  const Rat p(3, 5), r(3), q = 1 - p;
  const PolyFamily kc = classical_K(6, p, r);
  EXPECT_EQ(kc[0], XPoly(Rat(1)));
  EXPECT_EQ(kc[1], linear(-q * r, p));
  const Params pr = Params::make(Rat(-1, 1000000), Rat(1), p, r);
  const PolyFamily kd = K_series(6, pr, 8);
  for (int n = 0; n <= 6; ++n) {
    const Rat relative = max_abs_coeff(kd[n] - kc[n]) / max_abs_coeff(kc[n]);
    EXPECT_LT(relative, Rat(1, 10000)) << "n=" << n;
  }
}

}  // namespace
}  // namespace dkap
