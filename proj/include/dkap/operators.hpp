#pragma once

// Chaos expansions phi = sum_n phi_n K_n over the K-basis, and the scaling
// (phi(x) -> phi(z x)) and translation (phi(x) -> phi(x + y)) operators.

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>

#include "dkap/appell.hpp"
#include "dkap/combinatorics.hpp"
#include "dkap/params.hpp"
#include "dkap/poly.hpp"

namespace dkap {

/// Coefficients phi_0..phi_N on the K-basis, trailing zeros trimmed.
class ChaosVector {
 public:
  ChaosVector() = default;
  explicit ChaosVector(std::vector<Rat> coeffs);

  int size() const { return static_cast<int>(coeffs_.size()); }
  /// Zero outside the stored range.
  Rat operator[](int n) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  friend bool operator==(const ChaosVector& a, const ChaosVector& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rat> coeffs_;
};

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Upper-triangular change of basis: column n holds the monomial
/// coefficients of K_n, so monomial = basis * chaos.
class KBasis {
 public:
  KBasis(const Params& params, int degree);

  int degree() const { return degree_; }
  const Params& params() const { return params_; }
  const PolyFamily& family() const { return family_; }
  const RatMatrix& matrix() const { return matrix_; }

  XPoly chaos_to_poly(const ChaosVector& v) const;
  /// Back substitution on the triangular system; the diagonal is p^n.
  ChaosVector poly_to_chaos(const XPoly& p) const;

 private:
  Params params_;
  int degree_;
  PolyFamily family_;
  RatMatrix matrix_;
};

/// Shared basis of at least the requested degree, cached per parameter set.
std::shared_ptr<const KBasis> k_basis(const Params& params, int degree);

XPoly chaos_to_poly(const ChaosVector& v, const Params& params);
ChaosVector poly_to_chaos(const XPoly& p, const Params& params);

/// sigma_z by substituting x -> z x in the monomial basis.
ChaosVector scale_substitution(const ChaosVector& v, const Rat& z, const Params& params);
/// sigma_z from the closed expansion
///   sum_n n! phi_n sum_k eps_{n-k}(z x) sum_m rho(m,k) (-beta)_{m,lambda} / (m! k!).
ChaosVector scale_expansion(const ChaosVector& v, const Rat& z, const Params& params,
                            RhoVariant variant);
/// tau_y via the addition formula: coefficient on K_k is sum_n binom(n,k) phi_n [y]_{n-k}.
ChaosVector translate(const ChaosVector& v, const Rat& y, const Params& params);
/// tau_y by substituting x -> x + y in the monomial basis.
ChaosVector translate_substitution(const ChaosVector& v, const Rat& y, const Params& params);

/// Largest |coefficient| of sum_n P_n(x + y) z^n/n! - e^{yz} sum_n P_n(x) z^n/n!
/// through z^order.
Rat translation_series_residual(const Params& params, const Rat& y, int order);

/// JSON array of exact fraction strings.
std::string to_json(const ChaosVector& v);
ChaosVector chaos_from_json(const std::string& text);

}  // namespace dkap
