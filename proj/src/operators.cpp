#include "dkap/operators.hpp"

#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "dkap/pascal_measure.hpp"

namespace dkap {
namespace {

std::string params_key(const Params& params) {
  return to_string(params.lambda) + "|" + to_string(params.beta) + "|" + to_string(params.p) + "|" +
         to_string(params.r);
}

int needed_degree(const ChaosVector& v) { return std::max(v.size() - 1, 0); }

ChaosVector substitute_in(const ChaosVector& v, const Params& params, const XPoly& inner) {
  const auto basis = k_basis(params, needed_degree(v));
  return basis->poly_to_chaos(substitute(basis->chaos_to_poly(v), inner));
}

Rat fact(int n) { return Rat(factorial(static_cast<unsigned>(n))); }

}  // namespace

ChaosVector::ChaosVector(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat ChaosVector::operator[](int n) const {
  if (n < 0 || n >= size()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(n)];
}

KBasis::KBasis(const Params& params, int degree)
    : params_(params),
      degree_(degree),
      family_(K_series(degree, params, degree + 2)),
      matrix_(RatMatrix::Zero(degree + 1, degree + 1)) {
  require(degree >= 0, "KBasis: negative degree");
  for (int n = 0; n <= degree; ++n) {
    for (int i = 0; i <= n; ++i) matrix_(i, n) = family_[n].coeff(i);
  }
}

XPoly KBasis::chaos_to_poly(const ChaosVector& v) const {
  require(v.size() <= degree_ + 1, "chaos_to_poly: basis degree too small");
  XPoly out;
  for (int n = 0; n < v.size(); ++n) out += family_[n] * v[n];
  return out;
}

ChaosVector KBasis::poly_to_chaos(const XPoly& p) const {
  require(p.degree() <= degree_, "poly_to_chaos: basis degree too small");
  const int size = std::max(p.degree(), 0) + 1;
  RatVector rhs(size);
  for (int i = 0; i < size; ++i) rhs(i) = p.coeff(i);
  const RatVector solution =
      matrix_.topLeftCorner(size, size).triangularView<Eigen::Upper>().solve(rhs);
  return ChaosVector(std::vector<Rat>(solution.data(), solution.data() + size));
}

std::shared_ptr<const KBasis> k_basis(const Params& params, int degree) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const KBasis>> cache;
  const std::string key = params_key(params);
  {
    std::lock_guard lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end() && it->second->degree() >= degree) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is harmless.
  auto basis = std::make_shared<const KBasis>(params, std::max(degree, 8));
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot || slot->degree() < basis->degree()) slot = basis;
  return slot;
}

XPoly chaos_to_poly(const ChaosVector& v, const Params& params) {
  return k_basis(params, needed_degree(v))->chaos_to_poly(v);
}

ChaosVector poly_to_chaos(const XPoly& p, const Params& params) {
  return k_basis(params, std::max(p.degree(), 0))->poly_to_chaos(p);
}

ChaosVector scale_substitution(const ChaosVector& v, const Rat& z, const Params& params) {
  return substitute_in(v, params, XPoly::x() * z);
}

ChaosVector scale_expansion(const ChaosVector& v, const Rat& z, const Params& params,
                            RhoVariant variant) {
  const int top = needed_degree(v);
  // weight[k] = sum_m rho(m,k) (-beta)_{m,lambda} / (m! k!)
  std::vector<Rat> weight;
  for (int k = 0; k <= top; ++k) {
    Rat w(0);
    for (int m = 0; m <= k; ++m) {
      w += rho_scaling(m, k, params.q, params.r, variant) *
           deg_falling(Rat(-params.beta), m, params.lambda) / fact(m);
    }
    weight.push_back(w / fact(k));
  }
  std::vector<XPoly> eps;
  for (int j = 0; j <= top; ++j) eps.push_back(scale_argument(epsilon(j, params.q), z));
  XPoly image;
  for (int n = 0; n < v.size(); ++n) {
    if (v[n] == 0) continue;
    XPoly kn;
    for (int k = 0; k <= n; ++k) kn += eps[static_cast<std::size_t>(n - k)] * weight[static_cast<std::size_t>(k)];
    image += kn * (fact(n) * v[n]);
  }
  return poly_to_chaos(image, params);
}

ChaosVector translate(const ChaosVector& v, const Rat& y, const Params& params) {
  const int top = needed_degree(v);
  std::vector<Rat> bracket;
  for (int j = 0; j <= top; ++j) bracket.push_back(bracket_y(j, params.q)(y));
  std::vector<Rat> out(static_cast<std::size_t>(top) + 1, Rat(0));
  for (int k = 0; k <= top; ++k) {
    for (int n = k; n < v.size(); ++n) {
      out[static_cast<std::size_t>(k)] +=
          Rat(binomial(n, k)) * v[n] * bracket[static_cast<std::size_t>(n - k)];
    }
  }
  return ChaosVector(std::move(out));
}

ChaosVector translate_substitution(const ChaosVector& v, const Rat& y, const Params& params) {
  return substitute_in(v, params, XPoly::x() + XPoly(y));
}

Rat translation_series_residual(const Params& params, const Rat& y, int order) {
  const Series<XPoly> base = p_generating_series(params, order);
  Series<XPoly> shifted(order);
  for (int n = 0; n <= order; ++n) shifted[n] = shift_argument(base[n], y);
  Series<XPoly> eyz(order);
  for (int n = 0; n <= order; ++n) eyz[n] = XPoly(rat_pow(y, n) / fact(n));
  const Series<XPoly> diff = shifted - eyz * base;
  Rat worst(0);
  for (int n = 0; n <= order; ++n) worst = std::max(worst, max_abs_coeff(diff[n]));
  return worst;
}

std::string to_json(const ChaosVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rat& c : v.coeffs()) arr.push_back(to_string(c));
  return arr.dump();
}

ChaosVector chaos_from_json(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("chaos vector: expected a JSON array");
  std::vector<Rat> coeffs;
  for (const auto& item : arr) coeffs.push_back(parse_rat(item.get<std::string>()));
  return ChaosVector(std::move(coeffs));
}

}  // namespace dkap
