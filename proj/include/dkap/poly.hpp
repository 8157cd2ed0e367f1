#pragma once

// Dense univariate polynomials over a scalar field, plus the sparse bivariate
// polynomial used for addition-formula residuals.

#include <algorithm>
#include <concepts>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dkap/errors.hpp"
#include "dkap/scalar.hpp"

namespace dkap {

/// Polynomial sum_k c_k x^k with no trailing zero coefficient. The zero
/// polynomial has no coefficients and degree -1.
template <class Scalar>
class Poly {
 public:
  using scalar_type = Scalar;

  Poly() = default;
  Poly(const Scalar& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) coeffs_.push_back(constant);
  }
  explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly x() { return monomial(1); }
  static Poly monomial(int degree, const Scalar& coeff = Scalar(1)) {
    require(degree >= 0, "Poly::monomial: negative degree");
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = coeff;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k; zero outside the stored range.
  Scalar coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }
  std::span<const Scalar> coeffs() const { return coeffs_; }

  Scalar operator()(const Scalar& at) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly& operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }
  Poly& operator/=(const Scalar& s) {
    require(s != 0, "Poly: division by zero scalar");
    for (auto& c : coeffs_) c /= s;
    return *this;
  }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Scalar& s) { return a /= s; }
  template <std::integral I>
  friend Poly operator/(Poly a, I n) {
    return a /= Scalar(n);
  }
  template <std::integral I>
  friend Poly operator*(Poly a, I n) {
    return a *= Scalar(n);
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using XPoly = Poly<Rat>;

template <class Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p) {
  if (p.degree() <= 0) return {};
  std::vector<Scalar> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = p.coeff(k) * Scalar(k);
  return Poly<Scalar>(std::move(out));
}

/// p(q(x)) by Horner's scheme.
template <class Scalar>
Poly<Scalar> substitute(const Poly<Scalar>& p, const Poly<Scalar>& q) {
  Poly<Scalar> acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + Poly<Scalar>(p.coeff(k));
  return acc;
}

/// p(z x).
template <class Scalar>
Poly<Scalar> scale_argument(const Poly<Scalar>& p, const Scalar& z) {
  std::vector<Scalar> out(p.coeffs().begin(), p.coeffs().end());
  Scalar power(1);
  for (auto& c : out) {
    c *= power;
    power *= z;
  }
  return Poly<Scalar>(std::move(out));
}

/// p(x + y) for a scalar shift y.
template <class Scalar>
Poly<Scalar> shift_argument(const Poly<Scalar>& p, const Scalar& y) {
  std::vector<Scalar> shift{y, Scalar(1)};
  return substitute(p, Poly<Scalar>(std::move(shift)));
}

/// Largest |coefficient|; zero for the zero polynomial.
Rat max_abs_coeff(const XPoly& p);

/// Generalized binomial coefficient v(v-1)...(v-n+1)/n! for a scalar v.
Rat gen_binomial(const Rat& v, int n);
/// Generalized binomial coefficient with polynomial argument; degree n result.
XPoly gen_binomial(const XPoly& v, int n);

/// Falling factorial (v)_n = v(v-1)...(v-n+1) as a polynomial in x (v = x).
XPoly falling_factorial_poly(int n);

/// "c0 + c1 x + ..." in exact fractions, for diagnostics.
std::string to_string(const XPoly& p);

/// Sparse polynomial in two variables x, y with exact coefficients.
class XYPoly {
 public:
  using Key = std::pair<int, int>;  // (deg_x, deg_y)

  XYPoly() = default;
  static XYPoly from_x(const XPoly& p);
  static XYPoly from_y(const XPoly& p);
  /// p(x + y).
  static XYPoly sum_substitution(const XPoly& p);

  Rat coeff(int dx, int dy) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }
  Rat max_abs_coeff() const;

  XYPoly& operator+=(const XYPoly& other);
  XYPoly& operator-=(const XYPoly& other);
  XYPoly& operator*=(const Rat& s);
  friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
  friend XYPoly operator-(XYPoly a, const XYPoly& b) { return a -= b; }
  friend XYPoly operator*(XYPoly a, const Rat& s) { return a *= s; }
  friend XYPoly operator*(const XYPoly& a, const XYPoly& b);
  friend bool operator==(const XYPoly& a, const XYPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(Key key, const Rat& value);
  std::map<Key, Rat> terms_;
};

}  // namespace dkap
