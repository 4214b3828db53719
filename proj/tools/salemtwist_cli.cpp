// salemtwist command-line front end. Talks to the library only through the
// C interface.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "salemtwist/salemtwist.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct StringDeleter {
  void operator()(char* s) const { st_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Common {
  double tol = 1e-9;
  std::string output;
  std::string format;
};

int write_output(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return 0;
  }
  std::ofstream out(c.output, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "salemtwist: cannot write " << c.output << "\n";
    return kExitComputation;
  }
  return 0;
}

int failure(st_status s) {
  std::cerr << "salemtwist: " << st_status_string(s) << ": " << st_last_error_message() << "\n";
  return s == ST_INVALID_ARGUMENT || s == ST_PARSE_ERROR || s == ST_INVALID_PERMUTATION ? kExitUsage : kExitComputation;
}

// Emits a library document and maps its verdict onto the exit status.
int finish(st_status s, char* raw, int passed, const Common& c) {
  OwnedString text(raw);
  if (s != ST_OK) return failure(s);
  if (const int io = write_output(c, text.get()); io != 0) return io;
  return passed ? kExitPass : kExitCheckFailed;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    const int v = std::stoi(part, &used);
    if (used != part.size()) throw std::invalid_argument(part);
    return v;
  };
  try {
    if (dots == std::string::npos) {
      const int v = to_int(text);
      return {v, v};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--n-range", "expected A..B, got '" + text + "'");
  }
}

void add_common(CLI::App* sub, Common& c, const std::vector<std::string>& formats) {
  sub->add_option("--tol", c.tol, "Numerical tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("-o,--output", c.output, "Output file (default: standard output)");
  c.format = formats.front();
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
}

const std::map<std::string, st_convention> kConventions{{"calibrated", ST_CONVENTION_CALIBRATED},
                                                        {"literal", ST_CONVENTION_LITERAL}};
const std::map<std::string, st_twist_table> kTables{{"corrected", ST_TWIST_CORRECTED}, {"printed", ST_TWIST_PRINTED}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-group actions, Salem certificates and Penner stretch factors", "salemtwist"};
  app.require_subcommand(1);
  app.set_version_flag("--version", st_version());

  std::map<const CLI::App*, Common> settings;
  int n = 8;
  st_convention convention = ST_CONVENTION_CALIBRATED;
  unsigned threads = 0;
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Family index")->required()->check(CLI::Range(8, 100000)); };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads (default: SALEMTWIST_THREADS or all cores)");
  };
  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--convention", convention, "Chi exponent convention")
        ->transform(CLI::CheckedTransformer(kConventions))
        ->default_str("calibrated");
  };

  auto* report = app.add_subcommand("report", "Full report for one n");
  add_n(report);
  add_convention(report);
  add_common(report, settings[report], {"json"});

  auto* isotopy = app.add_subcommand("verify-isotopy", "Compare the surface action with the composed twists");
  std::string range = "8..25";
  st_twist_table table = ST_TWIST_CORRECTED;
  isotopy->add_option("--n-range", range, "Range A..B")->capture_default_str();
  isotopy->add_option("--tau-table", table, "Twist table")
      ->transform(CLI::CheckedTransformer(kTables))
      ->default_str("corrected");
  add_threads(isotopy);
  add_common(isotopy, settings[isotopy], {"text", "json"});

  auto* salem = app.add_subcommand("salem", "Convention report and Salem certificate");
  add_n(salem);
  add_convention(salem);
  add_common(salem, settings[salem], {"json"});

  auto* penner = app.add_subcommand("penner", "Penner product, characteristic polynomial and stretch factor");
  add_n(penner);
  std::string sigma = "()";
  penner->add_option("--sigma", sigma, "Permutation in cycle notation, e.g. \"(1 3 2)(4 5)\"")->capture_default_str();
  add_common(penner, settings[penner], {"json"});

  auto* sweep = app.add_subcommand("sweep", "Stretch factors over many permutations");
  add_n(sweep);
  st_sweep_options sweep_options;
  st_sweep_options_default(&sweep_options);
  std::size_t samples = sweep_options.samples;
  std::uint64_t seed = sweep_options.seed;
  std::optional<std::size_t> exhaustive;
  sweep->add_option("--samples", samples, "Number of sampled permutations")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  sweep->add_option("--exhaustive", exhaustive, "Enumerate all permutations when (n+2)! is at most this bound");
  add_threads(sweep);
  add_common(sweep, settings[sweep], {"csv", "json"});

  auto* growth = app.add_subcommand("growth", "Word-length growth of the surface action");
  add_n(growth);
  int iters = 15;
  growth->add_option("--iters", iters, "Iterations")->check(CLI::Range(2, 60))->capture_default_str();
  add_common(growth, settings[growth], {"json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const Common& common = settings.at(chosen);
  char* out = nullptr;
  int passed = 0;
  st_status status = ST_OK;
  if (*report) {
    status = st_report_family(n, common.tol, convention, &out, &passed);
    return finish(status, out, passed, common);
  }
  if (*salem) {
    status = st_report_salem(n, common.tol, convention, &out, &passed);
    return finish(status, out, passed, common);
  }
  if (*penner) {
    status = st_report_penner(n, sigma.c_str(), common.tol, &out, &passed);
    return finish(status, out, passed, common);
  }
  if (*growth) {
    status = st_report_growth(n, iters, common.tol, &out, &passed);
    return finish(status, out, passed, common);
  }
  if (*isotopy) {
    std::pair<int, int> bounds;
    try {
      bounds = parse_range(range);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return kExitUsage;
    }
    if (bounds.first < 8 || bounds.second < bounds.first) {
      std::cerr << "salemtwist: --n-range needs 8 <= A <= B\n";
      return kExitUsage;
    }
    const st_format format = common.format == "json" ? ST_FORMAT_JSON : ST_FORMAT_TEXT;
    status = st_report_isotopy_range(bounds.first, bounds.second, table, threads, format, &out, &passed);
    return finish(status, out, passed, common);
  }
  if (*sweep) {
    sweep_options.samples = samples;
    sweep_options.seed = seed;
    sweep_options.tol = common.tol;
    sweep_options.threads = threads;
    if (exhaustive) {
      sweep_options.exhaustive = 1;
      sweep_options.exhaustive_bound = *exhaustive;
    }
    char* csv = nullptr;
    char* summary = nullptr;
    const st_status s = st_report_sweep(n, &sweep_options, &csv, &summary, &passed);
    OwnedString csv_owner(csv);
    OwnedString summary_owner(summary);
    char* text = common.format == "csv" ? csv_owner.release() : summary_owner.release();
    return finish(s, text, passed, common);
  }
  return kExitUsage;
}
