#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "json.hpp"
#include "latticegen/error.hpp"
#include "latticegen/metrics.hpp"
#include "latticegen/sampler.hpp"
#include "latticegen/verification.hpp"

namespace {

using namespace latticegen;

struct Options {
  std::string model = "motzkin";
  std::string kind = "positive";
  std::string baseline = "recovery";
  std::string weight;
  std::string seed = "1";
  std::string format;
  std::string suite;
  std::string csv_path;
  std::size_t length = 0;
  std::size_t count = 1;
  std::size_t trials = 100;
  std::size_t max_length = 0;
  unsigned threads = 0;
};

SamplerSpec make_spec(const Options& o) {
  SamplerSpec spec;
  const auto family = family_from_string(o.model);
  expects(family.has_value(), "unknown model '" + o.model + "'");
  const auto kind = kind_from_string(o.kind);
  expects(kind.has_value(), "unknown kind '" + o.kind + "'");
  const auto method = method_from_string(o.baseline);
  expects(method.has_value(), "unknown baseline '" + o.baseline + "'");
  spec.family = *family;
  spec.kind = *kind;
  spec.method = *method;
  if (!o.weight.empty()) {
    auto c = parse_rational(o.weight);
    expects(c.has_value(), "weight must be a rational p/q, got '" + o.weight + "'");
    spec.weight = std::move(c);
  }
  return spec;
}

std::uint64_t make_seed(const Options& o) {
  const auto s = parse_seed(o.seed);
  expects(s.has_value(), "seed must be a decimal or 0x-prefixed 64-bit integer, got '" + o.seed + "'");
  return *s;
}

int sample_cmd(const Options& o) {
  const SamplerSpec spec = make_spec(o);
  validate(spec, o.length);
  const std::string format = o.format.empty() ? "steps" : o.format;
  expects(format == "steps" || format == "json" || format == "csv", "format must be steps, json or csv");
  BitSource src(make_seed(o));
  if (format == "csv") std::cout << "index,steps,geo_len,height\n";
  if (format == "json") std::cout << '[';
  for (std::size_t i = 0; i < o.count; ++i) {
    const Path p = sample(spec, o.length, src);
    if (format == "steps") {
      std::cout << p.text() << '\n';
    } else if (format == "csv") {
      std::cout << i << ',' << p.text() << ',' << p.geo_len() << ',' << p.height() << '\n';
    } else {
      std::cout << (i == 0 ? "" : ",") << p.json();
    }
  }
  if (format == "json") std::cout << "]\n";
  return 0;
}

int bench_cmd(const Options& o) {
  const SamplerSpec spec = make_spec(o);
  const FactorReport report = run_metered(spec, o.length, o.trials, make_seed(o), o.threads);
  if (!o.csv_path.empty()) {
    if (o.csv_path == "-") {
      std::cout << report.csv();
      std::cerr << report.json() << '\n';
      return 0;
    }
    std::ofstream out(o.csv_path);
    expects(static_cast<bool>(out), "cannot write '" + o.csv_path + "'");
    out << report.csv();
  }
  std::cout << report.json() << '\n';
  return 0;
}

int verify_cmd(const Options& o) {
  SuiteOptions so;
  if (o.max_length != 0) so.max_length = o.max_length;
  so.seed = make_seed(o);
  const std::string format = o.format.empty() ? "text" : o.format;
  expects(format == "text" || format == "json", "format must be text or json for verify");
  const SuiteReport report = run_suite(o.suite, so);
  std::cout << (format == "json" ? report.json() + "\n" : report.text());
  return report.passed() ? 0 : 1;
}

void add_sampler_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.model, "motzkin, motzkin-colored, schroeder, schroeder-little, dyck");
  cmd->add_option("--kind", o.kind, "positive, excursion, approximate (schroeder)");
  cmd->add_option("--length", o.length, "path length; geometric length for Schröder models")->required();
  cmd->add_option("--weight", o.weight, "C-step weight p/q for motzkin-colored");
  cmd->add_option("--seed", o.seed, "decimal or 0x-hex 64-bit seed");
  cmd->add_option("--baseline", o.baseline, "recovery or florentine");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform random Motzkin and Schröder paths by recovery"};
  app.require_subcommand(1);
  Options o;

  auto* sample = app.add_subcommand("sample", "draw random paths");
  add_sampler_flags(sample, o);
  sample->add_option("--count", o.count, "number of paths");
  sample->add_option("--format", o.format, "steps, json or csv");

  auto* bench = app.add_subcommand("bench", "measure time and entropy factors");
  add_sampler_flags(bench, o);
  bench->add_option("--trials", o.trials, "independent samples");
  bench->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  bench->add_option("--csv", o.csv_path, "write per-trial rows to a file, or - for stdout");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "lemmas, uniformity-exact, uniformity-empirical, counts, bijections, limits")
      ->required();
  verify->add_option("--max-length", o.max_length, "size bound overriding the suite default");
  verify->add_option("--seed", o.seed, "decimal or 0x-hex 64-bit seed");
  verify->add_option("--format", o.format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*sample) return sample_cmd(o);
    if (*bench) return bench_cmd(o);
    return verify_cmd(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
