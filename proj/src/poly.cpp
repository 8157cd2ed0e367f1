#include "dkap/poly.hpp"

#include <sstream>

namespace dkap {

Rat max_abs_coeff(const XPoly& p) {
  Rat best = 0;
  for (const auto& c : p.coeffs()) best = std::max(best, rat_abs(c));
  return best;
}

Rat gen_binomial(const Rat& v, int n) {
  require(n >= 0, "gen_binomial: negative n");
  Rat acc = 1;
  for (int i = 0; i < n; ++i) acc *= (v - i);
  return acc / Rat(factorial(static_cast<unsigned>(n)));
}

XPoly gen_binomial(const XPoly& v, int n) {
  require(n >= 0, "gen_binomial: negative n");
  XPoly acc(Rat(1));
  for (int i = 0; i < n; ++i) acc *= (v - XPoly(Rat(i)));
  return acc / Rat(factorial(static_cast<unsigned>(n)));
}

XPoly falling_factorial_poly(int n) {
  require(n >= 0, "falling_factorial_poly: negative n");
  XPoly acc(Rat(1));
  for (int i = 0; i < n; ++i) acc *= XPoly(std::vector<Rat>{Rat(-i), Rat(1)});
  return acc;
}

std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat c = p.coeff(k);
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    if (k == 1) out << "x";
    if (k > 1) out << "x^" << k;
  }
  return out.str();
}

XYPoly XYPoly::from_x(const XPoly& p) {
  XYPoly out;
  for (int k = 0; k <= p.degree(); ++k) out.add_term({k, 0}, p.coeff(k));
  return out;
}

XYPoly XYPoly::from_y(const XPoly& p) {
  XYPoly out;
  for (int k = 0; k <= p.degree(); ++k) out.add_term({0, k}, p.coeff(k));
  return out;
}

XYPoly XYPoly::sum_substitution(const XPoly& p) {
  XYPoly out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat c = p.coeff(k);
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) out.add_term({i, k - i}, c * Rat(binomial(k, i)));
  }
  return out;
}

Rat XYPoly::coeff(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat XYPoly::max_abs_coeff() const {
  Rat best = 0;
  for (const auto& [key, c] : terms_) best = std::max(best, rat_abs(c));
  return best;
}

void XYPoly::add_term(Key key, const Rat& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

XYPoly& XYPoly::operator+=(const XYPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

XYPoly& XYPoly::operator-=(const XYPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

XYPoly& XYPoly::operator*=(const Rat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

XYPoly operator*(const XYPoly& a, const XYPoly& b) {
  XYPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return out;
}

}  // namespace dkap
