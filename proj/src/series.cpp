#include "dkap/series.hpp"

namespace dkap {

Series<Real> to_real(const Series<Rat>& a) {
  Series<Real> out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = to_real(a[k]);
  return out;
}

Series<XPoly> to_poly_series(const Series<Rat>& a) {
  Series<XPoly> out(a.order());
  for (int k = 0; k <= a.order(); ++k) out[k] = XPoly(a[k]);
  return out;
}

Series<Rat> log1p_linear(int order, const Rat& c) {
  Series<Rat> out(order);
  Rat power = 1;
  for (int k = 1; k <= order; ++k) {
    power *= c;
    out[k] = (k % 2 == 1 ? power : Rat(-power)) / k;
  }
  return out;
}

Series<Rat> expm1_series(int order) {
  Series<Rat> out(order);
  Rat term = 1;
  for (int k = 1; k <= order; ++k) {
    term /= k;
    out[k] = term;
  }
  return out;
}

Series<XPoly> binomial_series(int order, const XPoly& exponent, const Rat& c) {
  Series<XPoly> out(order);
  Rat power = 1;
  for (int n = 0; n <= order; ++n) {
    out[n] = gen_binomial(exponent, n) * power;
    power *= c;
  }
  return out;
}

}  // namespace dkap
