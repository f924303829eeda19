#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "CLI11.hpp"
#include "csv_io.hpp"
#include "report.hpp"
#include "truncvar/truncvar.hpp"

namespace truncvar::cli {

namespace {

class Stopwatch {
public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct GenFlags {
  std::string kind = "random-walk";
  std::size_t length = 1000;
  std::uint64_t seed = 0;
  double scale = 1.0;
  double jump_intensity = 0.05;
  double target_level = 1.0;
  double amplitude = 0.999;

  void attach(CLI::App& cmd) {
    cmd.add_option("--kind", kind,
                   "random-walk | jump-mixture | ramp | near-threshold-oscillator")
        ->capture_default_str();
    cmd.add_option("--length", length, "number of samples")->capture_default_str();
    cmd.add_option("--seed", seed, "generator seed")->capture_default_str();
    cmd.add_option("--scale", scale, "step scale")->capture_default_str();
    cmd.add_option("--jump-intensity", jump_intensity, "jump probability (jump-mixture)")
        ->capture_default_str();
    cmd.add_option("--target-level", target_level, "reference level (oscillator)")
        ->capture_default_str();
    cmd.add_option("--amplitude", amplitude, "amplitude / target level (oscillator)")
        ->capture_default_str();
  }

  GeneratorSpec spec() const {
    GeneratorSpec s;
    s.kind = parse_generator_kind(kind);
    s.length = length;
    s.seed = seed;
    s.scale = scale;
    s.jump_intensity = jump_intensity;
    s.target_level = target_level;
    s.amplitude = amplitude;
    return s;
  }
};

std::vector<double> parse_level_spec(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? first : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw CliError(ExitCode::BadUsage, "--levels expects lo:hi:step, got '" + text + "'");
  }
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  try {
    lo = parse_double(text.substr(0, first));
    hi = parse_double(text.substr(first + 1, second - first - 1));
    step = parse_double(text.substr(second + 1));
  } catch (const CliError&) {
    throw CliError(ExitCode::BadUsage, "--levels expects lo:hi:step, got '" + text + "'");
  }
  return level_grid(lo, hi, step);
}

void cmd_tv(const std::string& input, double c, bool oracle, const std::string& prefix_out,
            std::ostream& out) {
  const SampledPath path = read_path_file(input);
  const Level level(c);
  RunReport report;
  report.command = "tv";
  report.digest(path);
  report.levels = {c};

  Stopwatch watch;
  const TruncatedVariations fast = truncated_variation(path, level);
  report.wall_ms = watch.elapsed_ms();
  report.add("utv", fast.utv);
  report.add("dtv", fast.dtv);
  report.add("tv", fast.tv);

  if (oracle) {
    const TruncatedVariations slow = oracle_truncated_variation(path, level);
    report.add("oracle_utv", slow.utv);
    report.add("oracle_dtv", slow.dtv);
    report.add("oracle_tv", slow.tv);
    const double gap = std::max({std::abs(fast.utv - slow.utv), std::abs(fast.dtv - slow.dtv),
                                 std::abs(fast.tv - slow.tv)});
    report.add("oracle_max_abs_discrepancy", gap);
  }
  if (!prefix_out.empty()) {
    const PrefixCurves curves = prefix_curves(path, level);
    const std::vector<double> times(path.times().begin(), path.times().end());
    const std::vector<std::string> header{"time", "utv", "dtv", "tv"};
    const std::vector<std::vector<double>> columns{times, curves.utv, curves.dtv, curves.tv};
    write_columns_file(prefix_out, header, columns);
    report.add("prefix_file", prefix_out);
  }
  report.render(out);
}

void cmd_approx(const std::string& input, double c, const std::string& output, bool zero_start,
                std::ostream& out) {
  const SampledPath path = read_path_file(input);
  const Level level(c);
  RunReport report;
  report.command = "approx";
  report.digest(path);
  report.levels = {c};

  Stopwatch watch;
  const ApproximationResult result =
      zero_start ? zero_start_approximation(path, level) : lazy_approximation(path, level);
  report.wall_ms = watch.elapsed_ms();
  write_path_file(output, result.approximation);
  report.add("variant", zero_start ? "zero-start" : "lazy");
  report.add("achieved_tv", result.achieved_tv);
  report.add("sup_error", result.sup_error);
  report.add("output_file", output);
  report.render(out);
}

void cmd_decompose(const std::string& input, double c, const std::string& out_up,
                   const std::string& out_down, std::ostream& out) {
  const SampledPath path = read_path_file(input);
  const Level level(c);
  RunReport report;
  report.command = "decompose";
  report.digest(path);
  report.levels = {c};

  Stopwatch watch;
  const RegimeDecomposition regimes = detect_regimes(path, level);
  JordanPair pair = jordan_pair(path, level);
  report.wall_ms = watch.elapsed_ms();
  write_path_file(out_up, with_values(path, pair.up_component));
  write_path_file(out_down, with_values(path, pair.down_component));
  const char* direction = regimes.first_direction == Direction::UpFirst     ? "up-first"
                          : regimes.first_direction == Direction::DownFirst ? "down-first"
                                                                            : "none";
  report.add("first_direction", direction);
  report.add("up_triggers", std::to_string(regimes.up_times.size()));
  report.add("down_triggers", std::to_string(regimes.down_times.size()));
  report.add("utv", pair.up_component.back());
  report.add("dtv", pair.down_component.back());
  report.add("up_file", out_up);
  report.add("down_file", out_down);
  report.render(out);
}

void cmd_sweep(const std::string& input, const std::string& levels_spec,
               const std::string& output, unsigned threads, std::ostream& out) {
  const SampledPath path = read_path_file(input);
  const std::vector<double> levels = parse_level_spec(levels_spec);
  RunReport report;
  report.command = "sweep";
  report.digest(path);
  report.levels = levels;

  Stopwatch watch;
  const SweepCurve curve = sweep(path, levels, threads);
  report.wall_ms = watch.elapsed_ms();
  const std::vector<std::string> header{"c", "tv"};
  const std::vector<std::vector<double>> columns{curve.levels, curve.tv_values};
  write_columns_file(output, header, columns);
  report.add("output_file", output);
  report.render(out);
}

void cmd_skeleton(const std::string& input, double c, const std::string& output,
                  std::ostream& out) {
  const SampledPath path = read_path_file(input);
  const Level level(c);
  RunReport report;
  report.command = "skeleton";
  report.digest(path);
  report.levels = {c};

  Stopwatch watch;
  const SampledPath skeleton = step_skeleton(path, level);
  report.wall_ms = watch.elapsed_ms();
  write_path_file(output, skeleton);
  report.add("breakpoints", std::to_string(skeleton.size()));
  report.add("sup_error", sup_distance(path, skeleton));
  report.add("output_file", output);
  report.render(out);
}

void cmd_gen(const GenFlags& flags, const std::string& output, std::ostream& out) {
  const GeneratorSpec spec = flags.spec();
  RunReport report;
  report.command = "gen";
  Stopwatch watch;
  const SampledPath path = generate(spec);
  report.wall_ms = watch.elapsed_ms();
  report.digest(path);
  write_path_file(output, path);
  report.add("kind", std::string(to_string(spec.kind)));
  report.add("seed", std::to_string(spec.seed));
  report.add("output_file", output);
  report.render(out);
}

void cmd_bench(const GenFlags& flags, double c, std::size_t repeat, std::ostream& out) {
  const Level level(c);
  const SampledPath path = generate(flags.spec());
  RunReport report;
  report.command = "bench";
  report.digest(path);
  report.levels = {c};

  TruncatedVariations result;
  double best_ms = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < std::max<std::size_t>(repeat, 1); ++r) {
    Stopwatch watch;
    result = truncated_variation(path, level);
    best_ms = std::min(best_ms, watch.elapsed_ms());
  }
  report.wall_ms = best_ms;
  report.add("tv", result.tv);
  report.add("samples_per_second",
             static_cast<double>(path.size()) / std::max(best_ms, 1e-9) * 1000.0);
  report.render(out);
}

ExitCode map_library_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidLevel:
    case ErrorCode::InvalidGrid:
    case ErrorCode::InvalidSpec:
      return ExitCode::NumericDomain;
    case ErrorCode::UnknownKind:
      return ExitCode::BadUsage;
    default:
      return ExitCode::MalformedInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"truncvar: truncated variation, lazy approximation and Jordan decomposition"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "truncvar 0.1.0");

  std::string input;
  std::string output;
  double level = 0.0;

  auto* tv = app.add_subcommand("tv", "UTV, DTV and TV at one level");
  bool oracle = false;
  std::string prefix_out;
  tv->add_option("input", input, "time,value file")->required();
  tv->add_option("-c,--level", level, "truncation level c > 0")->required();
  tv->add_flag("--oracle", oracle, "also run the quadratic partition oracle");
  tv->add_option("--prefix", prefix_out, "write per-sample time,utv,dtv,tv curves");

  auto* approx = app.add_subcommand("approx", "lazy approximation f^c (or zero-start f^{0,c})");
  bool zero_start = false;
  approx->add_option("input", input, "time,value file")->required();
  approx->add_option("-c,--level", level, "truncation level c > 0")->required();
  approx->add_option("-o,--out", output, "output path file")->required();
  approx->add_flag("--zero-start", zero_start, "emit up - down starting at 0");

  auto* decompose = app.add_subcommand("decompose", "minimal Jordan pair (up, down)");
  std::string out_up;
  std::string out_down;
  decompose->add_option("input", input, "time,value file")->required();
  decompose->add_option("-c,--level", level, "truncation level c > 0")->required();
  decompose->add_option("--out-up", out_up, "output file for the up component")->required();
  decompose->add_option("--out-down", out_down, "output file for the down component")
      ->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "TV^c over a level grid, as c,tv rows");
  std::string levels_spec;
  unsigned threads = 1;
  sweep_cmd->add_option("input", input, "time,value file")->required();
  sweep_cmd->add_option("--levels", levels_spec, "grid lo:hi:step")->required();
  sweep_cmd->add_option("-o,--out", output, "output c,tv file")->required();
  sweep_cmd->add_option("--threads", threads, "worker threads")->capture_default_str();

  auto* skeleton = app.add_subcommand("skeleton", "greedy step function within c/2");
  skeleton->add_option("input", input, "time,value file")->required();
  skeleton->add_option("-c,--level", level, "truncation level c > 0")->required();
  skeleton->add_option("-o,--out", output, "output path file")->required();

  auto* gen = app.add_subcommand("gen", "write a seeded synthetic path");
  GenFlags gen_flags;
  gen_flags.attach(*gen);
  gen->add_option("-o,--out", output, "output path file")->required();

  auto* bench = app.add_subcommand("bench", "throughput of the linear-time TV^c scan");
  GenFlags bench_flags;
  bench_flags.length = 10'000'000;
  bench_flags.attach(*bench);
  double bench_level = 1.0;
  std::size_t repeat = 3;
  bench->add_option("-c,--level", bench_level, "truncation level c > 0")->capture_default_str();
  bench->add_option("--repeat", repeat, "timed repetitions (best is reported)")
      ->capture_default_str();

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::BadUsage);
  }

  try {
    if (*tv) {
      cmd_tv(input, level, oracle, prefix_out, out);
    } else if (*approx) {
      cmd_approx(input, level, output, zero_start, out);
    } else if (*decompose) {
      cmd_decompose(input, level, out_up, out_down, out);
    } else if (*sweep_cmd) {
      cmd_sweep(input, levels_spec, output, threads, out);
    } else if (*skeleton) {
      cmd_skeleton(input, level, output, out);
    } else if (*gen) {
      cmd_gen(gen_flags, output, out);
    } else if (*bench) {
      cmd_bench(bench_flags, bench_level, repeat, out);
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(map_library_error(e.code()));
  }
  return 0;
}

}  // namespace truncvar::cli
