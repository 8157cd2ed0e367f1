#include "dkap/combinatorics.hpp"

#include <mutex>

namespace dkap {

namespace {

// Triangular table grown on demand; rows are appended under the lock and never
// modified afterwards, so readers see the same values as a sequential run.
class TriangularTable {
 public:
  using RowRule = Int (*)(const std::vector<std::vector<Int>>&, int n, int k);

  explicit TriangularTable(RowRule rule) : rule_(rule) { rows_.push_back({Int(1)}); }

  Int get(int n, int k) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const int row = static_cast<int>(rows_.size());
      std::vector<Int> values(static_cast<std::size_t>(row) + 1);
      for (int j = 0; j <= row; ++j) values[static_cast<std::size_t>(j)] = rule_(rows_, row, j);
      rows_.push_back(std::move(values));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  RowRule rule_;
  std::mutex mutex_;
  std::vector<std::vector<Int>> rows_;
};

Int previous(const std::vector<std::vector<Int>>& rows, int n, int k) {
  if (k < 0 || k > n) return 0;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// S(n,k) = k S(n-1,k) + S(n-1,k-1)
Int stirling2_rule(const std::vector<std::vector<Int>>& rows, int n, int k) {
  return Int(k) * previous(rows, n - 1, k) + previous(rows, n - 1, k - 1);
}

// s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
Int stirling1_rule(const std::vector<std::vector<Int>>& rows, int n, int k) {
  return previous(rows, n - 1, k - 1) - Int(n - 1) * previous(rows, n - 1, k);
}

TriangularTable& stirling2_table() {
  static TriangularTable table(&stirling2_rule);
  return table;
}

TriangularTable& stirling1_table() {
  static TriangularTable table(&stirling1_rule);
  return table;
}

void composition_recurse(int remaining, int parts_left, std::vector<int>& parts,
                         const std::function<void(std::span<const int>)>& visit) {
  if (parts_left == 0) {
    if (remaining == 0) visit(parts);
    return;
  }
  // Each remaining part needs at least 1.
  for (int first = 1; first <= remaining - (parts_left - 1); ++first) {
    parts.push_back(first);
    composition_recurse(remaining - first, parts_left - 1, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

Rat stirling2(int n, int k) {
  require(n >= 0 && k >= 0, "stirling2: negative argument");
  if (k > n) return 0;
  return Rat(stirling2_table().get(n, k));
}

Rat stirling1(int n, int k) {
  require(n >= 0 && k >= 0, "stirling1: negative argument");
  if (k > n) return 0;
  return Rat(stirling1_table().get(n, k));
}

void for_each_composition(int n, int m, const std::function<void(std::span<const int>)>& visit) {
  require(n >= 0 && m >= 0, "compositions: negative argument");
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(m));
  composition_recurse(n, m, parts, visit);
}

std::vector<Composition> compositions(int n, int m) {
  std::vector<Composition> out;
  for_each_composition(n, m, [&](std::span<const int> parts) {
    out.emplace_back(parts.begin(), parts.end());
  });
  return out;
}

Series<Rat> theta_series(int order, const Rat& q) {
  return log1p_linear(order, Rat(1)) - log1p_linear(order, q);
}

Series<Rat> zeta_series(int order, const Rat& q) {
  const Rat p = Rat(1) - q;
  const Series<Rat> u = expm1_series(order);
  Series<Rat> denom = Series<Rat>::constant(order, p);
  denom -= Series<Rat>(u).scale(q);
  return series_mul(u, series_reciprocal(denom));
}

Rat eta(int k, const Rat& q) {
  require(k >= 0, "eta: negative index");
  if (k == 0) return 0;
  const Rat magnitude = Rat(factorial(static_cast<unsigned>(k - 1))) * (Rat(1) - rat_pow(q, k));
  return k % 2 == 1 ? magnitude : Rat(-magnitude);
}

Rat kappa(int k, const Rat& q) {
  require(k >= 0, "kappa: negative index");
  if (k == 0) return 0;
  return zeta_series(k, q)[k] * Rat(factorial(static_cast<unsigned>(k)));
}

XPoly epsilon(int k, const Rat& q) {
  require(k >= 0, "epsilon: negative index");
  const XPoly x = XPoly::x();
  const auto plus = binomial_series(k, x, Rat(1));
  const auto minus = binomial_series(k, -x, q);
  return series_mul(plus, minus)[k];
}

XPoly epsilon_printed(int k, const Rat& q) {
  require(k >= 0, "epsilon_printed: negative index");
  const XPoly x = XPoly::x();
  XPoly total;
  for (int j = 0; j <= k; ++j) {
    XPoly term = gen_binomial(x, k - j) * gen_binomial(x + XPoly(Rat(j - 1)), k - j) * rat_pow(q, j);
    if (j % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

XPoly epsilon_binomial(int k, const Rat& q) {
  require(k >= 0, "epsilon_binomial: negative index");
  const XPoly x = XPoly::x();
  XPoly total;
  for (int j = 0; j <= k; ++j) {
    XPoly term = gen_binomial(x, k - j) * gen_binomial(x + XPoly(Rat(j - 1)), j) * rat_pow(q, j);
    if (j % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

XPoly bracket_y(int n, const Rat& q) {
  require(n >= 0, "bracket_y: negative index");
  XPoly total;
  for (int k = 0; k <= n; ++k) {
    // (-y)_k = (-1)^k y (y+1) ... (y+k-1)
    XPoly neg_falling(Rat(1));
    for (int i = 0; i < k; ++i) neg_falling *= XPoly(std::vector<Rat>{Rat(-i), Rat(-1)});
    total += falling_factorial_poly(n - k) * neg_falling * (Rat(binomial(n, k)) * rat_pow(q, k));
  }
  return total;
}

Rat varpi(int m, int n, const Rat& q) {
  require(m >= 0 && n >= 0, "varpi: negative index");
  const Rat sign = ((n + m) % 2 == 0) ? Rat(1) : Rat(-1);
  const Rat nfact(factorial(static_cast<unsigned>(n)));
  Rat total = 0;
  for_each_composition(n, m, [&](std::span<const int> parts) {
    Rat prod = 1;
    for (int i : parts) prod *= (Rat(1) - rat_pow(q, i)) / i;
    total += prod;
  });
  return sign * nfact * total;
}

Rat varrho(int m, int k, const Rat& q) {
  require(m >= 0 && k >= 0, "varrho: negative index");
  std::vector<Rat> kappas(static_cast<std::size_t>(k) + 1);
  if (k > 0) {
    const auto egf = egf_coeffs(zeta_series(k, q));
    for (int i = 0; i <= k; ++i) kappas[static_cast<std::size_t>(i)] = egf[static_cast<std::size_t>(i)];
  }
  const Rat kfact(factorial(static_cast<unsigned>(k)));
  Rat total = 0;
  for_each_composition(k, m, [&](std::span<const int> parts) {
    Rat term = kfact;
    for (int i : parts) term *= kappas[static_cast<std::size_t>(i)] / Rat(factorial(static_cast<unsigned>(i)));
    total += term;
  });
  return total;
}

Rat rho_scaling(int m, int k, const Rat& q, const Rat& r, RhoVariant variant) {
  require(m >= 0 && k >= 0, "rho_scaling: negative index");
  Rat harmonic = 0;
  for_each_composition(k, m, [&](std::span<const int> parts) {
    Rat prod = 1;
    for (int l : parts) prod /= l;
    harmonic += prod;
  });
  const Rat sign = ((k + m) % 2 == 0) ? Rat(1) : Rat(-1);
  const Rat kfact(factorial(static_cast<unsigned>(k)));
  const Rat prefactor =
      variant == RhoVariant::literal ? rat_pow(q, m) : Rat(rat_pow(q, k) * rat_pow(r, m));
  return sign * prefactor * kfact * harmonic;
}

}  // namespace dkap
