#include "dkap/commands.hpp"

#include <cmath>
#include <cstdio>

#include "dkap/pascal_measure.hpp"

namespace dkap {
namespace {

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

int real_digits(const Config& config) { return static_cast<int>(config.precision_digits / 2); }

StirlingBounds stirling_variant(const std::string& variant) {
  if (variant.empty() || variant == "oracle") return StirlingBounds::oracle;
  if (variant == "full") return StirlingBounds::full;
  if (variant == "printed") return StirlingBounds::printed;
  throw ConfigError("variant for stirling1 must be oracle, full or printed");
}

BellVariant bell_variant(const std::string& variant) {
  if (variant.empty() || variant == "corrected") return BellVariant::corrected;
  if (variant == "literal") return BellVariant::literal;
  throw ConfigError("variant for bell must be corrected or literal");
}

}  // namespace

PolyFamily build_family(const Config& config, const std::string& route, const std::string& variant) {
  const auto parsed = parse_route(route);
  if (!parsed) throw ConfigError("unknown route '" + route + "'");
  const Params& pr = config.params;
  const int n = config.n_max;
  const int order = config.series_order;
  auto no_variant = [&] {
    if (!variant.empty()) throw ConfigError("route '" + route + "' takes no variant");
  };
  switch (*parsed) {
    case Route::series: no_variant(); return K_series(n, pr, order);
    case Route::epsilon: no_variant(); return K_epsilon(n, pr);
    case Route::from_p: no_variant(); return K_from_P(P_series(n, pr, order), pr);
    case Route::stirling1: return K_stirling(P_series(n, pr, order), pr, stirling_variant(variant));
    case Route::bell_corrected: return K_bell(n, pr, bell_variant(variant));
    case Route::bell_literal: no_variant(); return K_bell(n, pr, BellVariant::literal);
    case Route::p_series: no_variant(); return P_series(n, pr, order);
    case Route::p_bell: no_variant(); return P_bell(n, pr);
    case Route::p_from_k: no_variant(); return P_from_K(K_series(n, pr, order), pr);
    case Route::p_stirling2: no_variant(); return P_from_K_stirling2(K_series(n, pr, order), pr);
    case Route::classical: no_variant(); return classical_K(n, pr.p, pr.r, order);
  }
  throw ConfigError("unknown route '" + route + "'");
}

Table polys_table(const Config& config, const std::string& route, const std::string& variant) {
  const PolyFamily family = build_family(config, route, variant);
  Table table{{"route", "n", "degree", "coefficients"}, {}, {}};
  for (int n = 0; n <= family.n_max(); ++n) {
    std::vector<std::string> coeffs;
    for (const Rat& c : family[n].coeffs()) coeffs.push_back(to_string(c));
    table.add_row({Cell::text(route), Cell::integer(n), Cell::integer(family[n].degree()), Cell::list(coeffs)});
  }
  return table;
}

Table moments_table(const Config& config) {
  const MeasureModel model(config.params, config.precision_digits, std::max(config.n_max, 1));
  ScopedPrecision guard(config.precision_digits);
  const std::vector<Rat> exact = moments_exact(config.n_max, config.params);
  const int digits = real_digits(config);
  Table table{{"m", "canonical", "literal", "truncated_sum", "gap"}, {}, {}};
  for (int m = 0; m <= config.n_max; ++m) {
    const Rat& canonical = exact[static_cast<std::size_t>(m)];
    const Real sum = model.moment_truncated_sum(m);
    const Cell literal = m == 0 ? Cell::null() : Cell::text(to_string(model.literal_moment(m), digits));
    table.add_row({Cell::integer(m), Cell::text(to_string(canonical)), literal, Cell::text(to_string(sum, digits)),
                   Cell::text(to_string(Real(abs(sum - to_real(canonical))), 6))});
  }
  return table;
}

Table sample_table(const Config& config, long count) {
  if (count < 1) throw ConfigError("sample count must be positive");
  const MeasureModel model(config.params, config.precision_digits);
  const std::vector<long> draws = sample(count, config.seed, config.params);
  const SampleSummary summary = summarize(draws, model);
  const auto pmf = model.pmf_table();
  const double total = static_cast<double>(count);
  Table table{{"n", "count", "frequency", "pmf", "residual"}, {}, {}};
  // Rows stop once nothing was observed and the remaining mass is negligible.
  std::size_t rows = summary.frequencies.size();
  while (rows > 1 && summary.frequencies[rows - 1] == 0 &&
         (rows - 1 >= pmf.size() || pmf[rows - 1].convert_to<double>() < 1e-15)) {
    --rows;
  }
  for (std::size_t n = 0; n < rows; ++n) {
    const long observed = summary.frequencies[n];
    const double expected = n < pmf.size() ? pmf[n].convert_to<double>() : 0.0;
    const Cell residual = expected > 0 ? Cell::text(decimal((observed - total * expected) / std::sqrt(total * expected)))
                                       : Cell::null();
    table.add_row({Cell::integer(static_cast<long>(n)), Cell::integer(observed),
                   Cell::text(decimal(static_cast<double>(observed) / total)), Cell::text(decimal(expected)), residual});
  }
  const Rat mean = moment_exact(1, config.params);
  table.summary = {
      {"count", Cell::integer(count)},
      {"seed", Cell::integer(static_cast<long>(config.seed))},
      {"mean", Cell::text(decimal(summary.mean))},
      {"standard_error", Cell::text(decimal(summary.standard_error))},
      {"exact_mean", Cell::text(to_string(mean))},
      {"mean_gap_in_se", Cell::text(decimal(std::fabs(summary.mean - mean.convert_to<double>()) / summary.standard_error))},
      {"total_variation", Cell::text(decimal(summary.total_variation))},
      {"cutoff", Cell::integer(model.cutoff())},
  };
  return table;
}

}  // namespace dkap
