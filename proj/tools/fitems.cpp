#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fitems/algorithms.hpp"
#include "fitems/core.hpp"
#include "fitems/generators.hpp"
#include "fitems/report.hpp"
#include "fitems/verify.hpp"

namespace {

using namespace fitems;

enum Exit : int {
  kOk = 0,
  kCheckFailure = 1,
  kUsage = 2,
  kLimit = 3,
  kUnreadable = 4,
  kBadInput = 5,
};

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) { throw Failure{code, std::move(message)}; }

AlgorithmId algorithm_arg(const std::string& text) {
  auto alg = parse_algorithm(text);
  if (!alg) fail(kUsage, "unknown algorithm '" + text + "' (expected nai, eag, maj or opt)");
  return *alg;
}

FamilyId family_arg(const std::string& text) {
  auto family = parse_family(text);
  if (!family) fail(kUsage, "unknown family '" + text + "' (expected E, W, W', half_half, eager_killer or adversary)");
  return *family;
}

std::string_view limit_flag(Budget budget) {
  switch (budget) {
    case Budget::canonical_length: return "--limit-canonical";
    case Budget::permutations: return "--limit-perms";
    case Budget::exhaustive_length: return "";
  }
  return "";
}

std::size_t parse_count(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) fail(kUsage, "bad " + what + " '" + std::string(text) + "'");
  return value;
}

// "lo..hi" or a single length.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_count(text, "length");
    return {n, n};
  }
  return {parse_count(std::string_view(text).substr(0, dots), "range"),
          parse_count(std::string_view(text).substr(dots + 2), "range")};
}

struct Limits {
  std::size_t canonical = kDefaultCanonicalLimit;
  std::uint64_t perms = kDefaultPermutationLimit;
  std::size_t jobs = 0;

  void add_to(CLI::App* app) {
    app->add_option("--limit-canonical", canonical, "Largest n enumerated exhaustively")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--limit-perms", perms, "Largest permutation count enumerated per multiset")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
  }

  SweepOptions options() const {
    SweepOptions o;
    o.canonical_limit = canonical;
    o.permutation_limit = perms;
    o.jobs = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
    return o;
  }
};

struct RunArgs {
  std::string alg;
  std::vector<std::string> tokens;
  std::string file;
  std::string family;
  std::size_t n = 0;
  std::string target;
  bool trace = false;
  std::string format = "text";
};

Sequence load_sequence(const RunArgs& args) {
  const int sources = !args.tokens.empty() + !args.file.empty() + !args.family.empty();
  if (sources != 1) fail(kUsage, "give exactly one of: inline tokens, --file, --family");
  if (!args.family.empty()) {
    if (args.n == 0) fail(kUsage, "--family needs --n");
    std::optional<AlgorithmId> target;
    if (!args.target.empty()) target = algorithm_arg(args.target);
    return generate(family_arg(args.family), args.n, target);
  }
  if (!args.file.empty()) {
    if (args.file == "-") return read_sequence(std::cin);
    std::ifstream in(args.file);
    if (!in) fail(kUnreadable, "cannot read '" + args.file + "'");
    return read_sequence(in);
  }
  std::string text;
  for (const auto& token : args.tokens) text += token + ' ';
  return parse_sequence(text);
}

int cmd_run(const RunArgs& args) {
  const auto alg = algorithm_arg(args.alg);
  Sequence seq = [&] {
    try {
      return load_sequence(args);
    } catch (const InvalidInput& e) {
      fail(args.family.empty() ? kBadInput : kUsage, e.what());
    }
  }();
  const auto run = run_algorithm(alg, seq);
  std::string trace;
  for (const auto& item : run.trace) trace += (trace.empty() ? "" : " ") + seq.name_of(item);

  if (args.format == "json") {
    nlohmann::ordered_json out{{"algorithm", to_string(alg)},
                               {"n", seq.size()},
                               {"profit", run.profit.str()},
                               {"value", run.profit.value().str()},
                               {"decimal", run.profit.decimal()}};
    if (args.trace) out["trace"] = trace;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "algorithm: " << to_string(alg) << '\n'
              << "n: " << seq.size() << '\n'
              << "profit: " << run.profit.str() << '\n'
              << "value: " << run.profit.value().str() << '\n'
              << "decimal: " << run.profit.decimal() << '\n';
    if (args.trace) std::cout << "trace: " << trace << '\n';
  }
  return kOk;
}

int cmd_generate(const std::string& family_text, std::size_t n, const std::string& target_text) {
  const auto family = family_arg(family_text);
  std::optional<AlgorithmId> target;
  if (!target_text.empty()) target = algorithm_arg(target_text);
  try {
    std::cout << format_sequence(generate(family, n, target));
  } catch (const InvalidInput& e) {
    fail(kUsage, e.what());
  }
  return kOk;
}

int cmd_sweep(const std::vector<std::string>& args, const std::string& mode_text, const std::string& format,
              const Limits& limits) {
  if (args.size() < 3 || args.size() > 4) fail(kUsage, "usage: sweep <measure> <algA> [algB] <lo..hi>");
  const auto measure = parse_measure(args[0]);
  if (!measure) fail(kUsage, "unknown measure '" + args[0] + "' (expected competitive, interval or worst-order)");
  const auto mode = parse_mode(mode_text);
  if (!mode) fail(kUsage, "unknown mode '" + mode_text + "' (expected exact or family)");
  const auto a = algorithm_arg(args[1]);
  std::optional<AlgorithmId> b;
  if (args.size() == 4) b = algorithm_arg(args[2]);
  const auto [lo, hi] = parse_range(args.back());
  std::vector<ReportRow> rows;
  try {
    rows = sweep(*measure, a, b, lo, hi, *mode, limits.options());
  } catch (const InvalidInput& e) {
    fail(kUsage, e.what());
  }
  std::cout << (format == "json" ? to_json(rows) : to_csv(rows));
  return kOk;
}

int cmd_verify(const Limits& limits, const std::string& format) {
  verify::Options options;
  options.limits = limits.options();
  const auto results = verify::run_all(options);
  std::cout << (format == "text" ? verify::summary_text(results) : verify::summary_json(results));
  return verify::all_passed(results) ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online frequent-items algorithms: run, generate, sweep and verify"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one algorithm on a sequence");
  run_cmd->add_option("alg", run.alg, "nai, eag, maj or opt")->required();
  run_cmd->add_option("tokens", run.tokens, "Inline sequence tokens");
  run_cmd->add_option("--file", run.file, "Sequence file, one or more tokens per line ('-' for stdin)");
  run_cmd->add_option("--family", run.family, "Generate the input from a named family");
  run_cmd->add_option("--n", run.n, "Length for --family");
  run_cmd->add_option("--target", run.target, "Target algorithm for the adversary family");
  run_cmd->add_flag("--trace", run.trace, "Print the buffered item at every step");
  run_cmd->add_option("--format", run.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string gen_family, gen_target;
  std::size_t gen_n = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Print a family member, one token per line");
  gen_cmd->add_option("family", gen_family, "E, W, W', half_half, eager_killer or adversary")->required();
  gen_cmd->add_option("n,--n", gen_n, "Sequence length");
  gen_cmd->add_option("--target", gen_target, "Target algorithm for the adversary family");

  std::vector<std::string> sweep_args;
  std::string sweep_mode = "exact", sweep_format = "csv";
  Limits sweep_limits;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a measure over a range of lengths");
  sweep_cmd->add_option("args", sweep_args, "<measure> <algA> [algB] <lo..hi>")->required();
  sweep_cmd->add_option("--mode", sweep_mode, "exact or family")->capture_default_str();
  sweep_cmd->add_option("--format", sweep_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_limits.add_to(sweep_cmd);

  Limits verify_limits;
  std::string verify_format = "json";
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--format", verify_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  verify_limits.add_to(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run);
    if (*gen_cmd) {
      if (gen_n == 0) fail(kUsage, "generate needs a length n");
      return cmd_generate(gen_family, gen_n, gen_target);
    }
    if (*sweep_cmd) return cmd_sweep(sweep_args, sweep_mode, sweep_format, sweep_limits);
    if (*verify_cmd) return cmd_verify(verify_limits, verify_format);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what();
    if (auto flag = limit_flag(e.budget()); !flag.empty()) std::cerr << " (raise it with " << flag << ")";
    std::cerr << '\n';
    return kLimit;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kUsage;
}
