#include "dkap/config.hpp"

#include <nlohmann/json.hpp>
#include <set>

#include "dkap/errors.hpp"

namespace dkap {
namespace {

Rat rational_field(const nlohmann::json& doc, const char* key, const Rat& fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  try {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + key + ": " + e.what());
  }
  throw ConfigError(std::string("config: ") + key + " must be a rational string such as \"-1/2\"");
}

long integer_field(const nlohmann::json& doc, const char* key, long fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError(std::string("config: ") + key + " must be an integer");
  return v.get<long>();
}

}  // namespace

Config default_config() {
  Config c;
  c.params = Params::make(Rat(-1, 2), Rat(2), Rat(3, 5), Rat(3));
  return c;
}

Config parse_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  static const std::set<std::string> known{"lambda", "beta", "p", "r", "n_max", "series_order",
                                           "precision_digits", "seed", "output_format"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw ConfigError("config: unknown key '" + key + "'");
  }
  Config c = default_config();
  const Rat lambda = rational_field(doc, "lambda", c.params.lambda);
  const Rat beta = rational_field(doc, "beta", c.params.beta);
  const Rat p = rational_field(doc, "p", c.params.p);
  const Rat r = rational_field(doc, "r", c.params.r);
  try {
    c.params = Params::make(lambda, beta, p, r);
  } catch (const ContractViolation& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  c.n_max = static_cast<int>(integer_field(doc, "n_max", c.n_max));
  c.series_order = static_cast<int>(integer_field(doc, "series_order", c.series_order));
  const long digits = integer_field(doc, "precision_digits", c.precision_digits);
  if (digits < 0) throw ConfigError("config: precision_digits must be positive");
  c.precision_digits = static_cast<unsigned>(digits);
  const long seed = integer_field(doc, "seed", static_cast<long>(c.seed));
  if (seed < 0) throw ConfigError("config: seed must be non-negative");
  c.seed = static_cast<std::uint64_t>(seed);
  if (doc.contains("output_format")) {
    const auto& v = doc.at("output_format");
    const auto format = v.is_string() ? parse_format(v.get<std::string>()) : std::nullopt;
    if (!format) throw ConfigError("config: output_format must be \"csv\" or \"json\"");
    c.output_format = *format;
  }
  validate(c);
  return c;
}

void validate(const Config& config) {
  if (config.n_max < 0) throw ConfigError("config: n_max must be non-negative");
  if (config.series_order < config.n_max + 2) {
    throw ConfigError("config: series_order must be at least n_max + 2");
  }
  if (config.precision_digits < kMinimumDigits) {
    throw ConfigError("config: precision_digits must be at least " + std::to_string(kMinimumDigits));
  }
}

std::string format_name(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

}  // namespace dkap
