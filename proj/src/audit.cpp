#include "dkap/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "dkap/appell.hpp"
#include "dkap/combinatorics.hpp"
#include "dkap/operators.hpp"
#include "dkap/pascal_measure.hpp"

namespace dkap {
namespace {

// Shared, lazily built inputs for one run.
class Context {
 public:
  explicit Context(const Config& config) : config(config), params(config.params), n(config.n_max) {}

  const PolyFamily& ks() {
    if (!ks_) ks_ = K_series(n, params, config.series_order);
    return *ks_;
  }
  const PolyFamily& ps() {
    if (!ps_) ps_ = P_series(n, params, config.series_order);
    return *ps_;
  }
  const MeasureModel& model() {
    if (!model_) model_.emplace(params, config.precision_digits, std::max(8, n));
    return *model_;
  }

  const Config& config;
  const Params& params;
  const int n;

 private:
  std::optional<PolyFamily> ks_, ps_;
  std::optional<MeasureModel> model_;
};

using Entries = std::vector<AuditEntry>;

AuditEntry exact(std::string id, std::string anchor, std::string variant, EntryKind kind, const Rat& residual,
                 std::string notes = {}) {
  return {std::move(id), std::move(anchor), std::move(variant), kind,
          residual == 0 ? Status::exact_match : Status::mismatch, to_string(residual), std::move(notes)};
}

AuditEntry within(std::string id, std::string anchor, std::string variant, EntryKind kind, const Real& residual,
                  const Real& tol, std::string notes = {}) {
  const bool ok = residual <= tol;
  if (!notes.empty()) notes += "; ";
  notes += "tolerance " + to_string(tol, 3);
  return {std::move(id), std::move(anchor), std::move(variant), kind,
          ok ? Status::match_within_tol : Status::mismatch, to_string(residual, 6), std::move(notes)};
}

std::string through(const char* what, int n) { return std::string(what) + " through n=" + std::to_string(n); }

Rat poly_residual(const std::vector<XPoly>& a, const std::vector<XPoly>& b) {
  Rat worst(0);
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, max_abs_coeff(a[i] - b[i]));
  return worst;
}

Rat chaos_residual(const ChaosVector& a, const ChaosVector& b) {
  Rat worst(0);
  for (int i = 0; i < std::max(a.size(), b.size()); ++i) worst = std::max(worst, rat_abs(a[i] - b[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// Canonical properties

Entries cross(Context& ctx) {
  const Params& pr = ctx.params;
  const int n = ctx.n;
  const auto& ks = ctx.ks();
  const auto& ps = ctx.ps();
  const auto k = EntryKind::canonical;
  Entries out;
  const std::string note = through("coefficient-wise", n);
  out.push_back(exact("k.route.epsilon", "K from epsilon_k and the c_n(r) recurrence", "canonical", k,
                      max_residual(ks, K_epsilon(n, pr)), note));
  out.push_back(exact("k.route.bell.corrected", "K from Bell polynomials of the reciprocal generating factor",
                      "mu arguments", k, max_residual(ks, K_bell(n, pr, BellVariant::corrected)), note));
  out.push_back(exact("k.route.stirling1.oracle", "K from P via powers of theta", "series power", k,
                      max_residual(ks, K_stirling(ps, pr, StirlingBounds::oracle)), note));
  out.push_back(exact("k.route.stirling1.full", "K from P via Stirling numbers of the first kind",
                      "m = j..n-k+j", k, max_residual(ks, K_stirling(ps, pr, StirlingBounds::full)), note));
  out.push_back(exact("p.route.bell", "P from Bell polynomials of the moments", "canonical", k,
                      max_residual(ps, P_bell(n, pr)), note));
  out.push_back(exact("p.route.from-k", "P from K via varrho", "canonical", k, max_residual(ps, P_from_K(ks, pr)),
                      note));
  out.push_back(exact("p.route.stirling2", "P from K via Stirling numbers of the second kind", "canonical", k,
                      max_residual(ps, P_from_K_stirling2(ks, pr)), note));

  const auto c = c_coeffs(n, pr);
  const auto c_series = c_coeffs_series(n, pr);
  const auto mu = mu_coeffs(n, pr);
  const auto mu_series = mu_coeffs_series(n, pr);
  Rat c_gap(0), mu_gap(0);
  for (int i = 0; i <= n; ++i) {
    c_gap = std::max(c_gap, rat_abs(c[static_cast<std::size_t>(i)] - c_series[static_cast<std::size_t>(i)]));
    mu_gap = std::max(mu_gap, rat_abs(mu[static_cast<std::size_t>(i)] - mu_series[static_cast<std::size_t>(i)]));
  }
  out.push_back(exact("coeff.c-recurrence", "c_n(r) recurrence", "canonical", k, c_gap,
                      "against the reciprocal series"));
  out.push_back(exact("coeff.mu-faa-di-bruno", "derivatives of e_lambda^beta o xi_q", "Faa di Bruno", k, mu_gap,
                      "against the composed series"));

  const int order = std::max(n, 12);
  const Series<Rat> theta = theta_series(order, pr.q), zeta = zeta_series(order, pr.q);
  const Series<Rat> t = Series<Rat>::variable(order);
  Rat inverse_gap(0);
  const Series<Rat> d1 = series_compose(theta, zeta) - t, d2 = series_compose(zeta, theta) - t;
  for (int i = 0; i <= order; ++i) inverse_gap = std::max({inverse_gap, rat_abs(d1[i]), rat_abs(d2[i])});
  out.push_back(exact("coeff.theta-zeta-inverse", "theta and zeta are compositional inverses", "canonical", k,
                      inverse_gap, "through order " + std::to_string(order)));

  std::vector<XPoly> dp, np, dk, sheffer;
  Rat lead_gap(0);
  for (int i = 1; i <= n; ++i) {
    dp.push_back(derivative(ps[i]));
    np.push_back(ps[i - 1] * i);
    dk.push_back(derivative(ks[i]));
    XPoly s;
    for (int j = 1; j <= i; ++j) s += ks[i - j] * (Rat(binomial(i, j)) * eta(j, pr.q));
    sheffer.push_back(s);
  }
  for (int i = 0; i <= n; ++i) lead_gap = std::max(lead_gap, rat_abs(ks[i].leading() - rat_pow(pr.p, i)));
  out.push_back(exact("appell.derivative.p", "P_n' = n P_{n-1}", "canonical", k, poly_residual(dp, np), note));
  out.push_back(exact("appell.derivative.k-sheffer", "K_n' = sum_j binom(n,j) eta_j K_{n-j}", "canonical", k,
                      poly_residual(dk, sheffer), note));
  out.push_back(exact("k.leading-coefficient", "leading coefficient of K_n is p^n", "canonical", k, lead_gap, note));
  return out;
}

Entries p1(Context& ctx) {
  return {exact("p1.k-from-p", "K_n = sum_m varpi(m,n)/m! P_m", "canonical", EntryKind::canonical,
                max_residual(ctx.ks(), K_from_P(ctx.ps(), ctx.params)), through("coefficient-wise", ctx.n))};
}

Entries p2(Context& ctx) {
  std::vector<XPoly> got, want;
  for (int i = 0; i <= ctx.n; ++i) {
    got.push_back(monomial_from_K(i, ctx.ks(), ctx.params));
    want.push_back(XPoly::monomial(i));
  }
  return {exact("p2.monomial", "x^n in terms of K and the moments", "canonical", EntryKind::canonical,
                poly_residual(got, want), through("exact", ctx.n))};
}

Entries p3(Context& ctx) {
  Rat corrected(0), literal(0);
  int first_literal = -1;
  for (int i = 0; i <= ctx.n; ++i) {
    corrected = std::max(corrected, addition_P3(i, ctx.ks(), ctx.params, P3Variant::corrected).max_abs_coeff());
    const Rat lit = addition_P3(i, ctx.ks(), ctx.params, P3Variant::literal).max_abs_coeff();
    if (lit != 0 && first_literal < 0) first_literal = i;
    literal = std::max(literal, lit);
  }
  return {
      exact("p3.addition.corrected", "K_n(x+y) from K_k(x) K_l(y) mu_m", "K_l(y)", EntryKind::canonical, corrected,
            through("bivariate residual", ctx.n)),
      exact("p3.addition.printed", "K_n(x+y) from K_k(x) K_l(x) mu_m", "K_l(x) as printed", EntryKind::literal,
            literal, first_literal < 0 ? "no discrepancy" : "first nonzero at n=" + std::to_string(first_literal)),
  };
}

Entries p4(Context& ctx) {
  Rat worst(0);
  for (int i = 0; i <= ctx.n; ++i) worst = std::max(worst, addition_P4(i, ctx.ks(), ctx.params).max_abs_coeff());
  return {exact("p4.addition", "K_n(x+y) = sum_k binom(n,k) K_k(x) [y]_{n-k}", "canonical", EntryKind::canonical,
                worst, through("bivariate residual", ctx.n))};
}

Entries normalization(Context& ctx) {
  const MeasureModel& model = ctx.model();
  ScopedPrecision guard(model.digits());
  const auto k = EntryKind::canonical;
  Entries out;

  Real mass = 0;
  for (const Real& v : model.pmf_table()) mass += v;
  const Real deficit = 1 - mass;
  AuditEntry norm = within("measure.normalization", "canonical pmf sums to one", "canonical", k, abs(deficit),
                           model.tail_tolerance(), "cutoff " + std::to_string(model.cutoff()));
  if (deficit < 0) norm.status = Status::mismatch;
  out.push_back(norm);

  const int m_max = std::min(ctx.n, 8);
  const auto moments = moments_exact(m_max, ctx.params);
  Real moment_gap = 0;
  for (int m = 0; m <= m_max; ++m) {
    const Real exact_value = to_real(moments[static_cast<std::size_t>(m)]);
    moment_gap = std::max<Real>(moment_gap, abs(model.moment_truncated_sum(m) - exact_value) / exact_value);
  }
  out.push_back(within("measure.moments", "exact moments against truncated sums", "relative", k, moment_gap,
                       pow10_neg(20), "m <= " + std::to_string(m_max)));

  Real bell_gap = 0, mixture_gap = 0;
  const int pmf_max = std::min(ctx.n, 10);
  for (int i = 0; i <= pmf_max; ++i) {
    bell_gap = std::max<Real>(bell_gap, relative_gap(model.canonical_pmf_bell(i), model.canonical_pmf(i)));
    mixture_gap = std::max<Real>(mixture_gap, abs(model.mixture_pmf(i) - model.canonical_pmf(i)));
  }
  out.push_back(within("measure.pmf-bell", "pmf by Faa di Bruno against the series", "relative", k, bell_gap,
                       pow10_neg(static_cast<int>(model.digits()) - 15), "n <= " + std::to_string(pmf_max)));
  out.push_back(within("measure.mixture-pmf", "pmf as a Gamma mixture of Pascal laws", "quadrature", k, mixture_gap,
                       pow10_neg(15), "n <= " + std::to_string(pmf_max)));

  Real laplace_gap = 0;
  for (const Rat& s : {Rat(1, 2), Rat(1), Rat(2)}) {
    const Real sr = to_real(s);
    laplace_gap = std::max<Real>(laplace_gap, abs(model.mixture_laplace(sr) - deg_exp(-sr, ctx.params)));
  }
  out.push_back(within("measure.mixture-laplace", "Laplace transform of the mixing density", "quadrature", k,
                       laplace_gap, pow10_neg(15), "s in {1/2, 1, 2}"));

  const Real s = to_real(Rat(1, 10)), t = to_real(Rat(1, 5));
  out.push_back(within("measure.joint-laplace", "E[Psi(s,X) Psi(t,X)] closed form against the sum", "canonical", k,
                       abs(model.joint_laplace(s, t) - model.joint_laplace_sum(s, t)), pow10_neg(15),
                       "(s,t) = (1/10, 1/5)"));
  const Real spread = abs(model.joint_laplace(s, t) - model.joint_laplace(to_real(Rat(1, 50)), Real(1)));
  AuditEntry nonorth{"measure.non-orthogonality", "E[Psi(s,X) Psi(t,X)] is not a function of st", "canonical", k,
                     spread > pow10_neg(6) ? Status::match_within_tol : Status::mismatch, to_string(spread, 6),
                     "residual is the gap between (1/10, 1/5) and (1/50, 1); must exceed 1e-6"};
  out.push_back(nonorth);
  return out;
}

Entries limit(Context& ctx) {
  const Params& pr = ctx.params;
  const int n = std::min(ctx.n, 6);
  const PolyFamily classical = classical_K(n, pr.p, pr.r, n + 2);
  ScopedPrecision guard(ctx.config.precision_digits);
  std::vector<Real> k_gaps, pmf_gaps;
  bool pmf_ok = true;
  for (long denom : {10000L, 100000L, 1000000L}) {
    const Params near = Params::make(Rat(-1, denom), Rat(1), pr.p, pr.r);
    const PolyFamily kd = K_series(n, near, n + 2);
    Rat worst(0);
    for (int i = 0; i <= n; ++i) worst = std::max(worst, max_abs_coeff(kd[i] - classical[i]) / max_abs_coeff(classical[i]));
    k_gaps.push_back(to_real(worst));
    const MeasureModel model(near, ctx.config.precision_digits, 0);
    Real pmf_worst = 0;
    for (int i = 0; i <= 10; ++i) {
      pmf_worst = std::max<Real>(pmf_worst, abs(model.canonical_pmf(i) - classical_pmf(i, to_real(pr.p), to_real(pr.r))));
    }
    pmf_ok = pmf_ok && pmf_worst <= to_real(Rat(10, denom));
    pmf_gaps.push_back(pmf_worst);
  }
  auto linear = [](const std::vector<Real>& gaps) {
    for (std::size_t i = 1; i < gaps.size(); ++i) {
      const double ratio = (gaps[i - 1] / gaps[i]).convert_to<double>();
      if (ratio < 9.0 || ratio > 11.0) return false;
    }
    return true;
  };
  auto ratios = [](const std::vector<Real>& gaps) {
    return "successive ratios " + to_string(Real(gaps[0] / gaps[1]), 4) + ", " + to_string(Real(gaps[1] / gaps[2]), 4);
  };
  AuditEntry k_entry = within("limit.krawtchouk", "beta = 1, lambda -> 0 gives classical Krawtchouk polynomials",
                              "relative, lambda = -1e-6", EntryKind::canonical, k_gaps.back(), pow10_neg(4),
                              ratios(k_gaps));
  if (!linear(k_gaps)) k_entry.status = Status::mismatch;
  AuditEntry pmf_entry{"limit.pascal-pmf", "beta = 1, lambda -> 0 gives the Pascal pmf", "absolute, lambda = -1e-6",
                       EntryKind::canonical,
                       pmf_ok && linear(pmf_gaps) ? Status::match_within_tol : Status::mismatch,
                       to_string(pmf_gaps.back(), 6), "bound 10|lambda| for n <= 10; " + ratios(pmf_gaps)};
  return {k_entry, pmf_entry};
}

ChaosVector unit_vector(int n) {
  std::vector<Rat> v(static_cast<std::size_t>(n) + 1, Rat(0));
  v.back() = 1;
  return ChaosVector(std::move(v));
}

ChaosVector mixed_vector(int n) {
  std::vector<Rat> v;
  for (int i = 0; i <= n; ++i) v.push_back(Rat(i % 2 == 0 ? i + 1 : -(i + 1), i + 2));
  return ChaosVector(std::move(v));
}

Entries scaling(Context& ctx) {
  const int n = std::min(ctx.n, 8);
  Rat corrected(0), literal(0);
  for (const Rat& z : {Rat(2), Rat(1, 3), Rat(-1)}) {
    for (int i = 0; i <= n; ++i) {
      const ChaosVector v = unit_vector(i);
      const ChaosVector oracle = scale_substitution(v, z, ctx.params);
      corrected = std::max(corrected, chaos_residual(scale_expansion(v, z, ctx.params, RhoVariant::corrected), oracle));
      literal = std::max(literal, chaos_residual(scale_expansion(v, z, ctx.params, RhoVariant::literal), oracle));
    }
  }
  Rat rho_gap(0);
  for (int k = 0; k <= n; ++k) {
    for (int m = 0; m <= k; ++m) {
      rho_gap = std::max(rho_gap, rat_abs(rho_scaling(m, k, ctx.params.q, ctx.params.r, RhoVariant::literal) -
                                          rho_scaling(m, k, ctx.params.q, ctx.params.r, RhoVariant::corrected)));
    }
  }
  const std::string note = "K_0..K_" + std::to_string(n) + ", z in {2, 1/3, -1}";
  return {
      exact("scaling.expansion.corrected", "closed expansion of sigma_z against substitution", "rho = k![t^k] xi^m",
            EntryKind::canonical, corrected, note),
      exact("scaling.expansion.printed", "closed expansion of sigma_z against substitution", "rho with q^m, no r^m",
            EntryKind::literal, literal, note),
      exact("scaling.rho", "rho(m,k) coefficients", "printed against corrected", EntryKind::literal, rho_gap,
            "m <= k <= " + std::to_string(n)),
  };
}

Entries translation(Context& ctx) {
  const int n = ctx.n;
  Rat addition(0);
  for (const Rat& y : {Rat(1), Rat(-2, 3), Rat(5, 2)}) {
    for (int i = 0; i <= n; ++i) {
      const ChaosVector v = unit_vector(i);
      addition = std::max(addition, chaos_residual(translate(v, y, ctx.params), translate_substitution(v, y, ctx.params)));
    }
  }
  const ChaosVector v = mixed_vector(n);
  const Rat y(1, 3), y2(-5, 2);
  const Rat group = chaos_residual(translate(translate(v, y2, ctx.params), y, ctx.params), translate(v, y + y2, ctx.params));
  const int order = std::max(12, ctx.config.series_order);
  Rat series(0);
  for (const Rat& yy : {Rat(1), Rat(-2, 3), Rat(5, 2)}) series = std::max(series, translation_series_residual(ctx.params, yy, order));
  return {
      exact("translation.addition", "tau_y through the addition formula against substitution", "canonical",
            EntryKind::canonical, addition, "K_0..K_" + std::to_string(n) + ", y in {1, -2/3, 5/2}"),
      exact("translation.group-law", "tau_y tau_y' = tau_{y+y'}", "canonical", EntryKind::canonical, group,
            "y = 1/3, y' = -5/2"),
      exact("translation.series", "tau_y multiplies e^{xz}/L(z) by e^{yz}", "canonical", EntryKind::canonical, series,
            "through order " + std::to_string(order)),
  };
}

// ---------------------------------------------------------------------------
// Literal formulas against their canonical counterparts

Entries literal(Context& ctx) {
  const Params& pr = ctx.params;
  const int n = ctx.n;
  const auto& ks = ctx.ks();
  const auto lit = EntryKind::literal;
  Entries out;

  std::vector<XPoly> eps, printed, derivation;
  for (int k = 0; k <= n; ++k) {
    eps.push_back(epsilon(k, pr.q));
    printed.push_back(epsilon_printed(k, pr.q));
    derivation.push_back(epsilon_binomial(k, pr.q));
  }
  out.push_back(exact("epsilon.closed-form.printed", "epsilon_k closed form", "binom(x+j-1, k-j)", lit,
                      poly_residual(printed, eps), through("against the series coefficient", n)));
  out.push_back(exact("epsilon.closed-form.derivation", "epsilon_k closed form", "binom(x+j-1, j)", lit,
                      poly_residual(derivation, eps), through("against the series coefficient", n)));

  const MeasureModel& model = ctx.model();
  {
    ScopedPrecision guard(model.digits());
    const Real mass = model.literal_total_mass();
    out.push_back(within("pmf.literal.mass", "literal pmf total mass", "1 + lambda(r log p + q) closed form", lit,
                         abs(mass - 1), model.tail_tolerance(), "total mass " + to_string(mass, 12)));
    out.push_back(within("pmf.literal.resummation", "literal pmf summed against its closed-form mass",
                         "internal consistency", lit, relative_gap(model.literal_power_sum(0), mass), pow10_neg(20)));
    const int m_max = std::min(std::max(n, 1), 8);
    Real vs_canonical = 0, vs_sum = 0;
    for (int m = 1; m <= m_max; ++m) {
      const Real value = model.literal_moment(m);
      vs_canonical = std::max<Real>(vs_canonical, relative_gap(value, to_real(moment_exact(m, pr))));
      vs_sum = std::max<Real>(vs_sum, relative_gap(value, model.literal_power_sum(m)));
    }
    out.push_back(within("moments.literal.canonical", "Stirling moment formula against exact moments", "relative",
                         lit, vs_canonical, pow10_neg(20), "1 <= m <= " + std::to_string(m_max)));
    out.push_back(within("moments.literal.resummation", "Stirling moment formula against sum n^m literal pmf",
                         "internal consistency", lit, vs_sum, pow10_neg(20), "1 <= m <= " + std::to_string(m_max)));

    // Density written with scale -1/lambda instead of -lambda.
    const Real shape = -to_real(pr.exponent());
    const Real scale = -1 / to_real(pr.lambda);
    Real worst = 0;
    for (const Rat& s : {Rat(1, 2), Rat(1), Rat(2)}) {
      // Gamma(shape, scale) Laplace transform (1 + scale s)^{-shape}
      const Real sr = to_real(s);
      worst = std::max<Real>(worst, abs(pow(1 + scale * sr, -shape) - deg_exp(-sr, pr)));
    }
    out.push_back(within("gamma.scale-statement", "Laplace transform of the mixing law", "scale -1/lambda as worded",
                         lit, worst, pow10_neg(15), "s in {1/2, 1, 2}; the density formula uses scale -lambda"));
  }

  const Rat q = pr.q, b = pr.beta, l = pr.lambda, r = pr.r, p = pr.p;
  const auto c = c_coeffs(std::max(n, 2), pr);
  const Rat c2_printed = 2 * q * q * b * b / r - b * q * q / r + (1 - b / l) * l * b * q * q;
  out.push_back(exact("example.c1", "first recurrence coefficient", "-q beta", lit, rat_abs(c[1] + q * b)));
  out.push_back(exact("example.c2", "second recurrence coefficient", "as printed", lit, rat_abs(c[2] - c2_printed),
                      "derived value " + to_string(c[2]) + ", printed " + to_string(c2_printed)));
  if (n >= 1) {
    const XPoly k1_printed(std::vector<Rat>{-b * r * q / p, Rat(1)});
    out.push_back(exact("example.k1", "first polynomial", "x - beta r q / p", lit, max_abs_coeff(ks[1] - k1_printed),
                        "canonical " + to_string(ks[1])));
    out.push_back(exact("example.k1-rescaled", "first polynomial divided by p", "x - beta r q / p", lit,
                        max_abs_coeff(ks[1] / p - k1_printed), "printed values are normalized to a monic leading term"));
  }
  if (n >= 2) {
    const XPoly k2_printed(std::vector<Rat>{r * r / (p * p) * c2_printed, -(2 * r * q * b / p + (1 - q * q) / (p * p)), Rat(1)});
    out.push_back(exact("example.k2", "second polynomial", "as printed", lit, max_abs_coeff(ks[2] - k2_printed),
                        "canonical " + to_string(ks[2])));
    out.push_back(exact("example.k2-rescaled", "second polynomial divided by p^2", "as printed", lit,
                        max_abs_coeff(ks[2] / (p * p) - k2_printed), "isolates the constant-term discrepancy"));
  }

  const PolyFamily stirling_printed = K_stirling(ctx.ps(), pr, StirlingBounds::printed);
  const auto first = first_mismatch(ks, stirling_printed);
  out.push_back(exact("stirling1.bounds.printed", "K from P via Stirling numbers of the first kind", "m = j..n-k-j",
                      lit, max_residual(ks, stirling_printed),
                      first ? "first mismatch at n=" + std::to_string(*first) : "no discrepancy"));

  const PolyFamily bell_literal = K_bell(n, pr, BellVariant::literal);
  const auto first_bell = first_mismatch(ks, bell_literal);
  out.push_back(exact("k.route.bell.literal", "K from Bell polynomials", "moment arguments M(j)", lit,
                      max_residual(ks, bell_literal),
                      first_bell ? "first mismatch at n=" + std::to_string(*first_bell) : "no discrepancy"));

  const auto moments = moments_exact(std::max(n, 1), pr);
  const std::vector<Rat> m_args(moments.begin() + 1, moments.end());
  Rat at_zero(0);
  for (int i = 0; i <= n; ++i) at_zero = std::max(at_zero, rat_abs(reciprocal_derivative(i, m_args) - ks[i](Rat(0))));
  out.push_back(exact("k.value-at-zero", "K_n(0) as a Bell sum", "moment arguments M(j)", lit, at_zero,
                      "with mu_j arguments the sum equals K_n(0) exactly"));

  std::vector<XPoly> dk, nk;
  for (int i = 1; i <= n; ++i) {
    dk.push_back(derivative(ks[i]));
    nk.push_back(ks[i - 1] * i);
  }
  out.push_back(exact("appell.derivative.k", "K_n' = n K_{n-1}", "Appell property claimed for K", lit,
                      poly_residual(dk, nk), "K is generated by e^{x theta(t)}/g(t), a Sheffer sequence"));
  return out;
}

using Group = std::function<Entries(Context&)>;

const std::map<std::string, Group>& groups() {
  static const std::map<std::string, Group> table{
      {"p1", p1},           {"p2", p2},         {"p3", p3},           {"p4", p4},
      {"cross", cross},     {"normalization", normalization},         {"limit", limit},
      {"scaling", scaling}, {"translation", translation},
  };
  return table;
}

}  // namespace

std::string kind_name(EntryKind kind) { return kind == EntryKind::canonical ? "canonical" : "literal"; }

std::string status_name(Status status) {
  switch (status) {
    case Status::exact_match: return "exact-match";
    case Status::match_within_tol: return "match-within-tol";
    case Status::mismatch: return "mismatch";
  }
  return "mismatch";
}

bool AuditReport::canonical_ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const AuditEntry& e) {
    return e.kind == EntryKind::canonical && e.status == Status::mismatch;
  });
}

void AuditReport::sort() {
  std::sort(entries.begin(), entries.end(),
            [](const AuditEntry& a, const AuditEntry& b) { return a.formula_id < b.formula_id; });
}

Table AuditReport::to_table() const {
  Table table{{"formula_id", "anchor", "variant", "kind", "status", "residual", "notes"}, {}, {}};
  for (const auto& e : entries) {
    table.add_row({Cell::text(e.formula_id), Cell::text(e.anchor), Cell::text(e.variant), Cell::text(kind_name(e.kind)),
                   Cell::text(status_name(e.status)), Cell::text(e.residual), Cell::text(e.notes)});
  }
  const long canonical = std::count_if(entries.begin(), entries.end(),
                                       [](const AuditEntry& e) { return e.kind == EntryKind::canonical; });
  const long literal_mismatch = std::count_if(entries.begin(), entries.end(), [](const AuditEntry& e) {
    return e.kind == EntryKind::literal && e.status == Status::mismatch;
  });
  table.summary = {{"entries", Cell::integer(static_cast<long>(entries.size()))},
                   {"canonical", Cell::integer(canonical)},
                   {"literal_mismatches", Cell::integer(literal_mismatch)},
                   {"canonical_ok", Cell::text(canonical_ok() ? "true" : "false")}};
  return table;
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{"p1",    "p2",            "p3",    "p4",      "cross",
                                              "normalization", "limit", "scaling", "translation"};
  return names;
}

AuditReport verify_property(const Config& config, const std::string& property) {
  const auto it = groups().find(property);
  if (it == groups().end()) throw ConfigError("unknown property '" + property + "'");
  validate(config);
  Context ctx(config);
  AuditReport report{it->second(ctx)};
  report.sort();
  return report;
}

AuditReport run_audit(const Config& config) {
  validate(config);
  Context ctx(config);
  AuditReport report;
  for (const auto& name : property_names()) {
    auto entries = groups().at(name)(ctx);
    report.entries.insert(report.entries.end(), entries.begin(), entries.end());
  }
  auto entries = literal(ctx);
  report.entries.insert(report.entries.end(), entries.begin(), entries.end());
  report.sort();
  return report;
}

}  // namespace dkap
