#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dkap/audit.hpp"
#include "dkap/commands.hpp"
#include "dkap/config.hpp"

namespace {

constexpr int kInvalidInput = 2;

struct Options {
  std::string params_file;
  std::optional<int> n_max, order;
  std::optional<unsigned> digits;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string route = "series";
  std::string variant;
  std::string property;
  long count = 100000;
};

dkap::Config load_config(const Options& opt) {
  dkap::Config config = dkap::default_config();
  if (!opt.params_file.empty()) {
    std::ifstream in(opt.params_file);
    if (!in) throw dkap::ConfigError("cannot read " + opt.params_file);
    std::stringstream text;
    text << in.rdbuf();
    config = dkap::parse_config(text.str());
  }
  if (opt.n_max) config.n_max = *opt.n_max;
  if (opt.order) config.series_order = *opt.order;
  if (opt.digits) config.precision_digits = *opt.digits;
  if (opt.seed) config.seed = *opt.seed;
  if (!opt.format.empty()) {
    const auto format = dkap::parse_format(opt.format);
    if (!format) throw dkap::ConfigError("format must be csv or json");
    config.output_format = *format;
  }
  dkap::validate(config);
  return config;
}

void emit(const dkap::Table& table, const dkap::Config& config) {
  std::cout << (config.output_format == dkap::OutputFormat::csv ? dkap::to_csv(table) : dkap::to_json(table));
  if (config.output_format == dkap::OutputFormat::json) std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degenerate Krawtchouk Appell polynomials: tables, sampling and formula audit"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&opt](CLI::App* sub) {
    sub->add_option("--params", opt.params_file, "JSON configuration file");
    sub->add_option("--n-max", opt.n_max, "largest polynomial or moment index");
    sub->add_option("--order", opt.order, "series truncation order");
    sub->add_option("--digits", opt.digits, "decimal digits for floating-point work");
    sub->add_option("--seed", opt.seed, "sampler seed");
    sub->add_option("--format", opt.format, "csv or json");
  };

  auto* polys = app.add_subcommand("polys", "polynomial coefficients along one route");
  common(polys);
  polys->add_option("--route", opt.route, "construction route");
  polys->add_option("--variant", opt.variant, "formula variant for stirling1 or bell");
  auto* moments = app.add_subcommand("moments", "moments of the degenerate Pascal measure");
  common(moments);
  auto* sample = app.add_subcommand("sample", "draws from the degenerate Pascal measure");
  common(sample);
  sample->add_option("--count", opt.count, "number of draws")->check(CLI::PositiveNumber);
  auto* audit = app.add_subcommand("audit", "check every formula against its canonical definition");
  common(audit);
  auto* verify = app.add_subcommand("verify", "check one property group");
  common(verify);
  verify->add_option("--property", opt.property, "p1|p2|p3|p4|cross|normalization|limit|scaling|translation")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    const dkap::Config config = load_config(opt);
    if (*polys) {
      emit(dkap::polys_table(config, opt.route, opt.variant), config);
    } else if (*moments) {
      emit(dkap::moments_table(config), config);
    } else if (*sample) {
      emit(dkap::sample_table(config, opt.count), config);
    } else {
      const dkap::AuditReport report =
          *audit ? dkap::run_audit(config) : dkap::verify_property(config, opt.property);
      emit(report.to_table(), config);
      return report.canonical_ok() ? 0 : 1;
    }
  } catch (const dkap::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
