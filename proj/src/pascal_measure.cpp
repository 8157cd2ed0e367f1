#include "dkap/pascal_measure.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <climits>
#include <cmath>

#include "dkap/combinatorics.hpp"
#include "dkap/errors.hpp"
#include "dkap/rng.hpp"

namespace dkap {

namespace {

constexpr int kMaxCutoff = 200000;
// Interpolation points between the growth rate and the singularity at which
// the Cauchy bound is tried; the best resulting cutoff wins.
constexpr double kRadiusFractions[] = {0.5, 0.6, 0.7, 0.8, 0.85, 0.9, 0.95, 0.98};

Real power_of(int n, int m) {
  if (m == 0) return Real(1);
  return pow(Real(n), m);
}

}  // namespace

Real deg_exp(const Real& z, const Rat& lambda, const Rat& beta) {
  const Real base = Real(1) + to_real(lambda) * z;
  if (base <= 0) throw DomainError("deg_exp: 1 + lambda z must be positive");
  return pow(base, to_real(beta / lambda));
}

std::optional<Rat> classical_pmf_exact(int n, const Rat& p, const Rat& r) {
  require(n >= 0, "classical_pmf: negative n");
  if (!is_integer(r)) return std::nullopt;
  const long ri = mp::numerator(r).convert_to<long>();
  const Rat q = Rat(1) - p;
  return rat_pow(p, ri) * gen_binomial(Rat(-r), n) * rat_pow(Rat(-q), n);
}

Real classical_pmf(int n, const Real& p, const Real& r) {
  require(n >= 0, "classical_pmf: negative n");
  const Real q = Real(1) - p;
  Real acc = pow(p, r);
  for (int i = 0; i < n; ++i) acc *= (r + i) * q / (i + 1);
  return acc;
}

Series<Rat> laplace_series(const Params& params, int order) {
  // r log(p/(1 - q e^z)) = -r log(1 - (q/p) u),  u = e^z - 1
  const Series<Rat> u = expm1_series(order);
  Series<Rat> inner = Series<Rat>::unit(order);
  inner -= Series<Rat>(u).scale(Rat(params.q / params.p));
  Series<Rat> argument = series_log1(inner).scale(Rat(-params.r));
  return deg_exp_series(argument, params.lambda, params.beta);
}

Rat moment_exact(int m, const Params& params) {
  require(m >= 0, "moment_exact: negative order");
  return laplace_series(params, m)[m] * Rat(factorial(static_cast<unsigned>(m)));
}

std::vector<Rat> moments_exact(int m_max, const Params& params) {
  require(m_max >= 0, "moments_exact: negative order");
  return egf_coeffs(laplace_series(params, m_max));
}

Real mixture_density(const Real& s, const Params& params) {
  if (s <= 0) throw DomainError("mixture_density: s must be positive");
  const Real shape = -to_real(params.exponent());
  const Real scale = -to_real(params.lambda);
  return pow(s, shape - 1) * exp(-s / scale) / (boost::math::tgamma(shape) * pow(scale, shape));
}

MeasureModel::MeasureModel(const Params& params, unsigned digits, int moment_power)
    : params_(params), digits_(digits) {
  require(digits >= 10, "MeasureModel: precision too small");
  require(moment_power >= 0, "MeasureModel: negative moment power");
  auto g = guard();
  lambda_ = to_real(params.lambda);
  beta_ = to_real(params.beta);
  p_ = to_real(params.p);
  q_ = to_real(params.q);
  r_ = to_real(params.r);
  exponent_ = to_real(params.exponent());
  base_ = Real(1) + lambda_ * r_ * log(p_);
  const Real shape = -exponent_;
  gamma_norm_ = boost::math::tgamma(shape) * pow(-lambda_, shape);
  cutoff_ = cutoff_for(moment_power, Real(1), tail_tolerance());
  pmf_ = canonical_pmf_values(cutoff_ + 1);
}

Real MeasureModel::tail_tolerance() const {
  auto g = guard();
  return pow10_neg(static_cast<int>(digits_ / 2));
}

Real MeasureModel::singularity() const {
  auto g = guard();
  // 1 + lambda r log(p / (1 - q w)) = 0
  return (Real(1) - p_ * exp(Real(1) / (lambda_ * r_))) / q_;
}

Real MeasureModel::log_generating_bound(const Real& radius) const {
  const Real inner = Real(1) + lambda_ * r_ * log(p_ / (Real(1) - q_ * radius));
  return exponent_ * log(inner);
}

int MeasureModel::cutoff_for(int power, const Real& growth, const Real& tol) const {
  auto g = guard();
  require(power >= 0, "cutoff_for: negative power");
  require(growth > 0 && tol > 0, "cutoff_for: growth and tolerance must be positive");
  const Real wstar = singularity();
  if (growth >= wstar) throw DomainError("cutoff_for: growth rate outside the radius of convergence");
  const double log_tol = log(tol).convert_to<double>();
  int best = INT_MAX;
  for (double fraction : kRadiusFractions) {
    const Real radius = growth + Real(fraction) * (wstar - growth);
    const double log_g = log_generating_bound(radius).convert_to<double>();
    const double log_x = log(growth / radius).convert_to<double>();
    for (int n = 0; n < std::min(best, kMaxCutoff); ++n) {
      const double next = n + 1.0;
      const double ratio = std::pow((n + 2.0) / next, power) * std::exp(log_x);
      if (ratio >= 1.0) continue;
      const double log_tail = log_g + power * std::log(next) + next * log_x - std::log1p(-ratio);
      if (log_tail <= log_tol) {
        best = n;
        break;
      }
    }
  }
  if (best == INT_MAX) throw DomainError("cutoff_for: no cutoff below the search limit");
  return best;
}

std::vector<Real> MeasureModel::canonical_pmf_values(int count) const {
  require(count >= 1, "canonical_pmf_values: count must be positive");
  auto g = guard();
  const int order = count - 1;
  // G(w) = base^e (1 + (lambda/base) h(w))^e,  h(w) = r sum_k q^k w^k / k
  Series<Real> a(order);
  a[0] = Real(1);
  Real qk(1);
  const Real scale = lambda_ / base_ * r_;
  for (int k = 1; k <= order; ++k) {
    qk *= q_;
    a[k] = scale * qk / k;
  }
  const Series<Real> b = series_fracpow(a, exponent_);
  const Real lead = pow(base_, exponent_);
  std::vector<Real> out(static_cast<std::size_t>(count));
  for (int k = 0; k <= order; ++k) out[static_cast<std::size_t>(k)] = lead * b[k];
  return out;
}

Real MeasureModel::canonical_pmf(int n) const {
  require(n >= 0, "canonical_pmf: negative n");
  if (n < static_cast<int>(pmf_.size())) return pmf_[static_cast<std::size_t>(n)];
  return canonical_pmf_values(n + 1).back();
}

Real MeasureModel::canonical_pmf_bell(int n) const {
  require(n >= 0, "canonical_pmf_bell: negative n");
  auto g = guard();
  std::vector<Real> outer(static_cast<std::size_t>(n) + 1);
  std::vector<Real> inner(static_cast<std::size_t>(n) + 1);
  inner[0] = r_ * log(p_);
  Real qm(1);
  for (int m = 1; m <= n; ++m) {
    qm *= q_;
    inner[static_cast<std::size_t>(m)] = r_ * qm * to_real(Int(factorial(static_cast<unsigned>(m - 1))));
  }
  for (int j = 0; j <= n; ++j) {
    outer[static_cast<std::size_t>(j)] =
        deg_falling(beta_, j, lambda_) * pow(base_, exponent_ - Real(j));
  }
  const Real deriv = faa_derivative<Real>(outer, inner, n);
  return deriv / to_real(factorial(static_cast<unsigned>(n)));
}

Real MeasureModel::literal_pmf(int n) const {
  require(n >= 0, "literal_pmf: negative n");
  auto g = guard();
  return pow(q_, n) / to_real(factorial(static_cast<unsigned>(n))) * deg_falling(beta_, n, lambda_) *
         pow(base_, exponent_ - Real(n));
}

Real MeasureModel::literal_total_mass() const {
  auto g = guard();
  return pow(base_ + lambda_ * q_, exponent_);
}

Real MeasureModel::literal_power_sum(int m) const {
  require(m >= 0, "literal_power_sum: negative power");
  auto g = guard();
  const Real tol = tail_tolerance() * pow10_neg(10);
  const Real shrink = -lambda_ * q_ / base_;  // limiting term ratio
  const Real a = -exponent_;
  Real term = pow(base_, exponent_);
  Real total = 0;
  for (int n = 0; n < kMaxCutoff; ++n) {
    total += power_of(n, m) * term;
    term *= q_ * (beta_ - Real(n) * lambda_) / (Real(n + 1) * base_);
    // Ratio bound for every later term.
    const Real growth = pow(Real(n + 2) / Real(n + 1), m) * shrink *
                        std::max(Real(1), (Real(n + 1) + a) / Real(n + 2));
    if (n >= 1 && growth < 1 && power_of(n + 1, m) * term / (Real(1) - growth) < tol) return total;
  }
  throw DomainError("literal_power_sum: series did not converge");
}

Real MeasureModel::literal_moment(int m) const {
  require(m >= 1, "literal_moment: defined for m >= 1 only");
  auto g = guard();
  const Real x = q_ / base_;
  Real total = 0;
  for (int k = 1; k <= m; ++k) {
    const Real shifted = pow(Real(1) + lambda_ * x, (beta_ - lambda_ * k) / lambda_);
    total += to_real(stirling2(m, k)) * pow(x, k) * deg_falling(beta_, k, lambda_) * shifted;
  }
  return pow(base_, exponent_) * total;
}

Real MeasureModel::laplace(const Real& z) const {
  auto g = guard();
  const Real qez = q_ * exp(z);
  if (qez >= 1) throw DomainError("laplace: requires q e^z < 1");
  return deg_exp(r_ * log(p_ / (Real(1) - qez)), params_);
}

Real MeasureModel::laplace_truncated_sum(const Real& z) const {
  auto g = guard();
  const Real growth = exp(z);
  const int n = std::max(cutoff_, cutoff_for(0, growth, tail_tolerance()));
  const auto values = canonical_pmf_values(n + 1);
  Real total = 0;
  Real factor = 1;
  for (const Real& v : values) {
    total += v * factor;
    factor *= growth;
  }
  return total;
}

Real MeasureModel::moment_truncated_sum(int m) const {
  require(m >= 0, "moment_truncated_sum: negative order");
  auto g = guard();
  const int n = std::max(cutoff_, cutoff_for(m, Real(1), tail_tolerance()));
  const auto values = n + 1 <= static_cast<int>(pmf_.size()) ? pmf_ : canonical_pmf_values(n + 1);
  Real total = 0;
  for (int k = 0; k <= n; ++k) total += power_of(k, m) * values[static_cast<std::size_t>(k)];
  return total;
}

Real MeasureModel::mixture_integral(const std::function<Real(const Real&)>& f) const {
  auto g = guard();
  const Real shape = -exponent_;
  const Real scale = -lambda_;
  const Real log_norm = log(gamma_norm_);
  auto integrand = [&](const Real& s) -> Real {
    if (s <= 0 || !isfinite(s)) return Real(0);
    const Real weight = exp((shape - 1) * log(s) - s / scale - log_norm);
    if (weight == 0) return Real(0);
    const Real value = f(s) * weight;
    return isfinite(value) ? value : Real(0);
  };
  boost::math::quadrature::exp_sinh<Real> integrator;
  Real error = 0;
  return integrator.integrate(integrand, pow10_neg(static_cast<int>(digits_) - 10), &error);
}

Real MeasureModel::mixture_pmf(int n) const {
  require(n >= 0, "mixture_pmf: negative n");
  auto g = guard();
  const Real nfact = to_real(factorial(static_cast<unsigned>(n)));
  return mixture_integral([&](const Real& s) {
    const Real a = r_ * s;
    Real rising = 1;
    for (int i = 0; i < n; ++i) rising *= (a + i);
    return pow(p_, a) * pow(q_, n) * rising / nfact;
  });
}

Real MeasureModel::mixture_laplace(const Real& s) const {
  auto g = guard();
  return mixture_integral([&](const Real& x) { return exp(-s * x); });
}

Real MeasureModel::joint_laplace(const Real& s_in, const Real& t_in) const {
  auto g = guard();
  // Fixed evaluation order makes the result exactly symmetric.
  const Real& s = s_in <= t_in ? s_in : t_in;
  const Real& t = s_in <= t_in ? t_in : s_in;
  const Real qs = Real(1) + q_ * s;
  const Real qt = Real(1) + q_ * t;
  if (qs <= 0 || qt <= 0 || s <= -1 || t <= -1) throw DomainError("joint_laplace: invalid arguments");
  const Real prod = qt * qs;
  const Real denom = prod - q_ * (Real(1) + t) * (Real(1) + s);
  if (denom <= 0) throw DomainError("joint_laplace: outside the domain of the Laplace transform");
  const Real numerator = deg_exp(r_ * log(p_ * prod / denom), params_);
  return numerator / (deg_exp(r_ * log(qt), params_) * deg_exp(r_ * log(qs), params_));
}

Real MeasureModel::joint_laplace_sum(const Real& s, const Real& t) const {
  auto g = guard();
  const Real omega_s = (Real(1) + s) / (Real(1) + q_ * s);
  const Real omega_t = (Real(1) + t) / (Real(1) + q_ * t);
  const Real growth = omega_s * omega_t;
  const int n = cutoff_for(0, growth, tail_tolerance());
  const auto values = canonical_pmf_values(n + 1);
  Real total = 0;
  Real factor = 1;
  for (const Real& v : values) {
    total += v * factor;
    factor *= growth;
  }
  return total / (deg_exp(r_ * log(Real(1) + q_ * s), params_) *
                  deg_exp(r_ * log(Real(1) + q_ * t), params_));
}

std::vector<long> sample(long count, std::uint64_t seed, const Params& params) {
  require(count >= 1, "sample: count must be positive");
  const double shape = -params.exponent().convert_to<double>();
  const double scale = -params.lambda.convert_to<double>();
  const double r = params.r.convert_to<double>();
  const double odds = (params.q / params.p).convert_to<double>();
  RandomStream mixing(seed, 0);
  RandomStream intensity(seed, 1);
  RandomStream counts(seed, 2);
  std::vector<long> draws(static_cast<std::size_t>(count));
  for (auto& x : draws) {
    const double s = mixing.gamma(shape, scale);
    const double rate = intensity.gamma(r * s, odds);
    x = counts.poisson(rate);
  }
  return draws;
}

SampleSummary summarize(std::span<const long> draws, const MeasureModel& model) {
  require(!draws.empty(), "summarize: empty sample");
  SampleSummary out;
  out.count = static_cast<long>(draws.size());
  const long top = std::max<long>(*std::max_element(draws.begin(), draws.end()), model.cutoff());
  out.frequencies.assign(static_cast<std::size_t>(top) + 1, 0);
  double sum = 0;
  for (long x : draws) {
    ++out.frequencies[static_cast<std::size_t>(x)];
    sum += static_cast<double>(x);
  }
  const double n = static_cast<double>(out.count);
  out.mean = sum / n;
  double ss = 0;
  for (long x : draws) ss += (static_cast<double>(x) - out.mean) * (static_cast<double>(x) - out.mean);
  out.standard_error = std::sqrt(ss / (n - 1.0) / n);
  const auto pmf = model.pmf_table();
  double tv = 0;
  double covered = 0;
  for (std::size_t k = 0; k < out.frequencies.size(); ++k) {
    const double expected = k < pmf.size() ? pmf[k].convert_to<double>() : 0.0;
    covered += expected;
    tv += std::fabs(static_cast<double>(out.frequencies[k]) / n - expected);
  }
  tv += std::max(0.0, 1.0 - covered);
  out.total_variation = 0.5 * tv;
  return out;
}

}  // namespace dkap
