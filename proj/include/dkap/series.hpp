#pragma once

// Truncated formal power series sum_{k<=N} a_k t^k over a coefficient ring.
//
// The ring is Rat, Real, or a polynomial ring Poly<Rat>. All operations keep
// exactly N+1 coefficients and never look past index N, so two series of the
// same order are equal iff they agree coefficient-wise through t^N.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dkap/errors.hpp"
#include "dkap/poly.hpp"
#include "dkap/scalar.hpp"

namespace dkap {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_rat(const Rat& v) { return v; }
  static bool is_zero(const Rat& v) { return v == 0; }
  static bool is_one(const Rat& v) { return v == 1; }
  static bool is_invertible(const Rat& v) { return v != 0; }
  static Rat inverse(const Rat& v) { return Rat(1) / v; }
};

template <>
struct RingTraits<Real> {
  static Real zero() { return Real(0); }
  static Real one() { return Real(1); }
  static Real from_rat(const Rat& v) { return to_real(v); }
  static bool is_zero(const Real& v) { return v == 0; }
  static bool is_one(const Real& v) { return v == 1; }
  static bool is_invertible(const Real& v) { return v != 0; }
  static Real inverse(const Real& v) { return Real(1) / v; }
};

template <class S>
struct RingTraits<Poly<S>> {
  static Poly<S> zero() { return {}; }
  static Poly<S> one() { return Poly<S>(S(1)); }
  static Poly<S> from_rat(const Rat& v) { return Poly<S>(RingTraits<S>::from_rat(v)); }
  static bool is_zero(const Poly<S>& v) { return v.is_zero(); }
  static bool is_one(const Poly<S>& v) { return v.degree() == 0 && v.coeff(0) == 1; }
  static bool is_invertible(const Poly<S>& v) { return v.degree() == 0; }
  static Poly<S> inverse(const Poly<S>& v) { return Poly<S>(S(1) / v.coeff(0)); }
};

template <class R>
class Series {
 public:
  using ring_type = R;

  explicit Series(int order) : coeffs_(checked_size(order), RingTraits<R>::zero()) {}
  /// Coefficients beyond the order are dropped; missing ones are zero.
  Series(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order), RingTraits<R>::zero());
  }

  static Series constant(int order, const R& value) {
    Series s(order);
    s.coeffs_[0] = value;
    return s;
  }
  static Series unit(int order) { return constant(order, RingTraits<R>::one()); }
  /// The series t.
  static Series variable(int order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = RingTraits<R>::one();
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const R& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  R& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const R> coeffs() const { return coeffs_; }

  Series& operator+=(const Series& other) {
    require_same_order(other, "series addition");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  Series& operator-=(const Series& other) {
    require_same_order(other, "series subtraction");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  template <class S>
  Series& scale(const S& factor) {
    for (auto& c : coeffs_) c = c * factor;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  void require_same_order(const Series& other, const char* what) const {
    if (order() != other.order()) {
      throw ContractViolation(std::string(what) + ": order mismatch");
    }
  }

 private:
  static std::size_t checked_size(int order) {
    require(order >= 0, "Series: negative order");
    return static_cast<std::size_t>(order) + 1;
  }

  std::vector<R> coeffs_;
};

/// Truncated Cauchy product.
template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
  a.require_same_order(b, "series_mul");
  const int n = a.order();
  Series<R> out(n);
  for (int i = 0; i <= n; ++i) {
    if (RingTraits<R>::is_zero(a[i])) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  return series_mul(a, b);
}

template <class R>
Series<R> series_pow(const Series<R>& a, int m) {
  require(m >= 0, "series_pow: negative exponent");
  Series<R> result = Series<R>::unit(a.order());
  for (int i = 0; i < m; ++i) result = series_mul(result, a);
  return result;
}

template <class R>
Series<R> series_reciprocal(const Series<R>& a) {
  if (!RingTraits<R>::is_invertible(a[0])) {
    throw NonInvertibleSeries("series_reciprocal: constant term is not invertible");
  }
  const int n = a.order();
  const R inv0 = RingTraits<R>::inverse(a[0]);
  Series<R> b(n);
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    R acc = RingTraits<R>::zero();
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -(acc * inv0);
  }
  return b;
}

template <class R>
Series<R> series_derivative(const Series<R>& a) {
  Series<R> out(a.order());
  for (int k = 1; k <= a.order(); ++k) out[k - 1] = a[k] * k;
  return out;
}

/// log(a) for a(0) = 1, via L' = a'/a.
template <class R>
Series<R> series_log1(const Series<R>& a) {
  require(RingTraits<R>::is_one(a[0]), "series_log1: constant term must be 1");
  const int n = a.order();
  const Series<R> quotient = series_mul(series_derivative(a), series_reciprocal(a));
  Series<R> out(n);
  for (int k = 1; k <= n; ++k) out[k] = quotient[k - 1] / k;
  return out;
}

/// exp(g) for g(0) = 0, via E' = g' E.
template <class R>
Series<R> series_exp(const Series<R>& g) {
  require(RingTraits<R>::is_zero(g[0]), "series_exp: constant term must be 0");
  const int n = g.order();
  Series<R> e(n);
  e[0] = RingTraits<R>::one();
  for (int k = 1; k <= n; ++k) {
    R acc = RingTraits<R>::zero();
    for (int i = 1; i <= k; ++i) acc += g[i] * e[k - i] * i;
    e[k] = acc / k;
  }
  return e;
}

/// a^e for a(0) = 1 and a scalar exponent e, via a b' = e a' b:
///   n b_n = sum_{k=1}^{n} (e k - (n - k)) a_k b_{n-k}.
/// `E` is the scalar type the ring can be multiplied by (Rat or Real).
template <class R, class E>
Series<R> series_fracpow(const Series<R>& a, const E& e) {
  require(RingTraits<R>::is_one(a[0]), "series_fracpow: constant term must be 1");
  const int n = a.order();
  Series<R> b(n);
  b[0] = RingTraits<R>::one();
  for (int m = 1; m <= n; ++m) {
    R acc = RingTraits<R>::zero();
    for (int k = 1; k <= m; ++k) {
      if (RingTraits<R>::is_zero(a[k])) continue;
      const E weight = e * E(k) - E(m - k);
      acc += a[k] * b[m - k] * weight;
    }
    b[m] = acc / m;
  }
  return b;
}

/// f(g(t)) for g(0) = 0, by Horner's scheme in the series ring.
template <class R>
Series<R> series_compose(const Series<R>& f, const Series<R>& g) {
  f.require_same_order(g, "series_compose");
  require(RingTraits<R>::is_zero(g[0]), "series_compose: inner series must vanish at 0");
  const int n = f.order();
  Series<R> acc(n);
  for (int k = n; k >= 0; --k) {
    acc = series_mul(acc, g);
    acc[0] += f[k];
  }
  return acc;
}

/// Exponential generating coefficients: n! [t^n] a.
template <class R>
std::vector<R> egf_coeffs(const Series<R>& a) {
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(a.order()) + 1);
  Int fact = 1;
  for (int k = 0; k <= a.order(); ++k) {
    if (k > 0) fact *= k;
    out.push_back(a[k] * RingTraits<R>::from_rat(Rat(fact)));
  }
  return out;
}

/// Builds the series sum_k values[k] t^k / k! from exponential coefficients.
template <class R>
Series<R> from_egf(int order, std::span<const R> values) {
  Series<R> out(order);
  Int fact = 1;
  for (int k = 0; k <= order && k < static_cast<int>(values.size()); ++k) {
    if (k > 0) fact *= k;
    out[k] = values[static_cast<std::size_t>(k)] * RingTraits<R>::from_rat(Rat(1) / Rat(fact));
  }
  return out;
}

/// Converts a Rat-coefficient series to a Real-coefficient one.
Series<Real> to_real(const Series<Rat>& a);

/// Lifts a Rat series into the polynomial ring (constant coefficients).
Series<XPoly> to_poly_series(const Series<Rat>& a);

/// Mercator-type series log(1 + c t) = sum_{k>=1} (-1)^{k+1} c^k t^k / k.
Series<Rat> log1p_linear(int order, const Rat& c);

/// e^t - 1.
Series<Rat> expm1_series(int order);

/// (1 + c t)^v = sum_n binom(v, n) c^n t^n with polynomial exponent v.
Series<XPoly> binomial_series(int order, const XPoly& exponent, const Rat& c);

}  // namespace dkap
