// amm: approximate matrix multiplication through a regularized probe system.
//
//   amm gen      --n N --dist D --max-mag M --seed S --out PATH
//   amm multiply --a PATH --b PATH --delta D [--epsilon E] [--probe paper|const:V|random]
//                [--solver sd|sd-fixed|closed] --out PATH
//   amm evaluate --a PATH --b PATH --delta D [solver/probe flags] --report PATH.json
//   amm sweep    --sizes 8,16,32,64 --trials T --dist D --max-mag M --delta D
//                [--baseline-s s1,s2] --report PATH.json --csv PATH.csv
//
// Exit codes: 0 success, 2 input/parse error, 3 solver failure.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amm/csv.hpp"
#include "amm/error.hpp"
#include "amm/harness.hpp"
#include "amm/pipeline.hpp"
#include "amm/report.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;

struct SolveFlags {
  double delta = 0.0;
  std::optional<double> epsilon;
  std::string probe = "paper";
  std::uint64_t probe_seed = 1;
  std::string solver = "sd";
  std::optional<std::size_t> max_iters;
  std::optional<double> max_mag;
};

void add_solve_flags(CLI::App& cmd, SolveFlags& f) {
  cmd.add_option("--delta", f.delta, "Target Frobenius error")->required();
  cmd.add_option("--epsilon", f.epsilon, "Regularization (default 1/n^3)");
  cmd.add_option("--probe", f.probe, "paper | const:V | random")->capture_default_str();
  cmd.add_option("--probe-seed", f.probe_seed, "Seed for --probe random")->capture_default_str();
  cmd.add_option("--solver", f.solver, "sd | sd-fixed | closed")->capture_default_str();
  cmd.add_option("--max-iters", f.max_iters, "Solver iteration cap");
}

amm::ProbeSchedule parse_probe(SolveFlags const& f) {
  if (f.probe == "paper") return amm::PaperSchedule{f.epsilon};
  if (f.probe == "random") return amm::RandomUnitSchedule{f.probe_seed, f.epsilon};
  if (f.probe.rfind("const:", 0) == 0) {
    std::string const text = f.probe.substr(6);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
      throw amm::InputError("--probe: cannot parse constant '" + text + "'");
    }
    return amm::ConstantSchedule{value, f.epsilon};
  }
  throw amm::InputError("--probe: expected paper, const:V or random, got '" + f.probe + "'");
}

amm::ApproxConfig make_config(SolveFlags const& f) {
  amm::ApproxConfig config;
  config.delta = f.delta;
  config.schedule = parse_probe(f);
  config.solver = amm::parse_solver_kind(f.solver);
  config.max_iters = f.max_iters;
  config.magnitude_bound = f.max_mag;
  config.rho();  // validates delta
  return config;
}

std::vector<std::size_t> parse_size_list(std::string const& text, char const* flag) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto const comma = text.find(',', start);
    std::string const item = text.substr(start, comma - start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw amm::InputError(std::string(flag) + ": '" + item + "' is not a count");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate matrix multiplication by steepest descent on a probe system"};
  app.require_subcommand(1);

  // gen
  amm::GenSpec gen;
  std::string gen_dist = "uniform-signed";
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated test matrix as CSV");
  gen_cmd->add_option("--n", gen.n, "Matrix size")->required();
  gen_cmd->add_option("--dist", gen_dist,
                      "uniform-signed | uniform-nonneg | integer-grid | identity | zero")
      ->capture_default_str();
  gen_cmd->add_option("--max-mag", gen.max_magnitude, "Entry magnitude bound M")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output CSV path")->required();

  // multiply
  SolveFlags mul;
  std::string mul_a, mul_b, mul_out;
  auto* mul_cmd = app.add_subcommand("multiply", "Approximate C' = AB and write it as CSV");
  mul_cmd->add_option("--a", mul_a, "CSV matrix A")->required();
  mul_cmd->add_option("--b", mul_b, "CSV matrix B")->required();
  add_solve_flags(*mul_cmd, mul);
  mul_cmd->add_option("--max-mag", mul.max_mag, "Reject inputs with |entry| > M");
  mul_cmd->add_option("--out", mul_out, "Output CSV path")->required();

  // evaluate
  SolveFlags ev;
  std::string ev_a, ev_b, ev_report;
  auto* ev_cmd = app.add_subcommand("evaluate", "Compare C' against the exact product");
  ev_cmd->add_option("--a", ev_a, "CSV matrix A")->required();
  ev_cmd->add_option("--b", ev_b, "CSV matrix B")->required();
  add_solve_flags(*ev_cmd, ev);
  ev_cmd->add_option("--max-mag", ev.max_mag, "Reject inputs with |entry| > M");
  ev_cmd->add_option("--report", ev_report, "JSON report path")->required();

  // sweep
  SolveFlags sw;
  std::string sw_sizes, sw_dist = "uniform-signed", sw_baseline, sw_report, sw_csv;
  std::size_t sw_trials = 1;
  double sw_max_mag = 1.0;
  std::uint64_t sw_seed = 1;
  auto* sw_cmd = app.add_subcommand("sweep", "Evaluate over sizes and trials");
  sw_cmd->add_option("--sizes", sw_sizes, "Comma-separated ascending sizes")->required();
  sw_cmd->add_option("--trials", sw_trials, "Trials per size")->capture_default_str();
  sw_cmd->add_option("--dist", sw_dist, "Generator distribution")->capture_default_str();
  sw_cmd->add_option("--max-mag", sw_max_mag, "Entry magnitude bound M")->capture_default_str();
  sw_cmd->add_option("--seed", sw_seed, "Base seed")->capture_default_str();
  add_solve_flags(*sw_cmd, sw);
  sw_cmd->add_option("--baseline-s", sw_baseline, "Comma-separated sampling sizes s");
  sw_cmd->add_option("--report", sw_report, "JSON report path")->required();
  sw_cmd->add_option("--csv", sw_csv, "CSV report path");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen_cmd) {
      gen.distribution = amm::parse_distribution(gen_dist);
      amm::write_matrix_csv(amm::gen_matrix(gen), gen_out);
    } else if (*mul_cmd) {
      auto const config = make_config(mul);
      auto const result =
          amm::approx_multiply(amm::read_matrix_csv(mul_a), amm::read_matrix_csv(mul_b), config);
      amm::write_matrix_csv(result.c_prime, mul_out);
    } else if (*ev_cmd) {
      auto const config = make_config(ev);
      amm::ErrorReport const report =
          amm::evaluate(amm::read_matrix_csv(ev_a), amm::read_matrix_csv(ev_b), config);
      amm::write_text_file(ev_report,
                           amm::report_json(std::span<amm::ErrorReport const>(&report, 1)).dump(2) + "\n");
      std::cout << "n=" << report.n << " fro_abs=" << report.fro_abs
                << " delta_met=" << (report.delta_met ? "true" : "false")
                << " iterations=" << report.iterations << '\n';
    } else if (*sw_cmd) {
      amm::SweepSpec spec;
      spec.sizes = parse_size_list(sw_sizes, "--sizes");
      spec.trials = sw_trials;
      spec.distribution = amm::parse_distribution(sw_dist);
      spec.max_magnitude = sw_max_mag;
      spec.seed = sw_seed;
      spec.config = make_config(sw);
      if (!sw_baseline.empty()) spec.baseline_s = parse_size_list(sw_baseline, "--baseline-s");

      amm::SweepResult const result = amm::sweep(spec);
      amm::write_text_file(sw_report, amm::report_json(result).dump(2) + "\n");
      if (!sw_csv.empty()) amm::write_text_file(sw_csv, amm::report_csv(result.runs));
      for (auto const& s : result.sizes) {
        std::cout << "n=" << s.n << " median_time_per_iter_s=" << s.median_time_per_iter_s
                  << " iterations=[" << s.min_iterations << "," << s.max_iterations << "]\n";
      }
    }
  } catch (amm::SolverError const& e) {
    std::cerr << "amm: solver failure: " << e.what() << '\n';
    return kExitSolver;
  } catch (amm::Error const& e) {
    std::cerr << "amm: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
