#pragma once

// Run configuration: a JSON document whose keys mirror the fields below,
// with command-line flags applied on top.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "dkap/params.hpp"

namespace dkap {

enum class OutputFormat { csv, json };

/// Raised for any invalid configuration; the CLI maps it to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  Params params;
  int n_max = 10;
  int series_order = 16;
  unsigned precision_digits = 60;
  std::uint64_t seed = 42;
  OutputFormat output_format = OutputFormat::json;
};

/// lambda = -1/2, beta = 2, p = 3/5, r = 3 and the field defaults above.
Config default_config();

/// Overlays the keys present in `json_text` on the defaults. Unknown keys,
/// wrong types and malformed rationals are ConfigErrors. The result is validated.
Config parse_config(const std::string& json_text);

/// series_order >= n_max + 2, n_max >= 0, precision_digits >= 40.
void validate(const Config& config);

std::string format_name(OutputFormat format);
std::optional<OutputFormat> parse_format(const std::string& name);

}  // namespace dkap
