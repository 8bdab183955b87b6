#include "amm/report.hpp"

#include <fstream>
#include <sstream>

#include "amm/csv.hpp"
#include "amm/error.hpp"

namespace amm {

nlohmann::json to_json(ErrorReport const& r) {
  nlohmann::json baseline = nlohmann::json::array();
  for (auto const& b : r.baseline) baseline.push_back({{"s", b.s}, {"fro_rel", b.fro_rel}});
  return {
      {"n", r.n},
      {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
      {"fro_abs", r.fro_abs},
      {"fro_rel", r.fro_rel},
      {"probe_residual", r.probe_residual},
      {"iterations", r.iterations},
      {"delta_target", r.delta_target},
      {"delta_met", r.delta_met},
      {"m_prime", r.m_prime},
      {"x_prime_norm", r.x_prime_norm},
      {"x_dprime_norm", r.x_dprime_norm},
      {"x_tprime_norm", r.x_tprime_norm},
      {"time_build_s", r.time_build_s},
      {"time_solve_s", r.time_solve_s},
      {"time_exact_s", r.time_exact_s},
      {"baseline", std::move(baseline)},
  };
}

nlohmann::json report_json(std::span<ErrorReport const> runs) {
  nlohmann::json out = nlohmann::json::array();
  for (auto const& r : runs) out.push_back(to_json(r));
  return {{"version", kReportVersion}, {"runs", std::move(out)}};
}

nlohmann::json report_json(SweepResult const& result) {
  nlohmann::json j = report_json(std::span<ErrorReport const>(result.runs));
  nlohmann::json sizes = nlohmann::json::array();
  for (auto const& s : result.sizes) {
    sizes.push_back({{"n", s.n},
                     {"median_time_per_iter_s", s.median_time_per_iter_s},
                     {"min_iterations", s.min_iterations},
                     {"max_iterations", s.max_iterations}});
  }
  nlohmann::json scaling = nlohmann::json::array();
  for (auto const& s : result.scaling)
    scaling.push_back({{"n_from", s.n_from}, {"n_to", s.n_to}, {"ratio", s.ratio}});
  j["summary"] = {{"sizes", std::move(sizes)}, {"scaling", std::move(scaling)}};
  return j;
}

std::string report_csv(std::span<ErrorReport const> runs) {
  std::vector<std::size_t> baseline_s;
  if (!runs.empty())
    for (auto const& b : runs.front().baseline) baseline_s.push_back(b.s);

  std::ostringstream out;
  out << "n,seed,fro_abs,fro_rel,probe_residual,system_residual,iterations,converged,rho,"
         "delta_target,delta_met,m_prime,x_prime_norm,x_dprime_norm,x_tprime_norm,"
         "time_build_s,time_solve_s,time_exact_s,time_iterations_s,time_per_iter_s";
  for (std::size_t s : baseline_s) out << ",baseline_s" << s << "_fro_rel";
  out << '\n';

  auto const num = [](double x) { return format_double(x); };
  for (auto const& r : runs) {
    out << r.n << ',' << (r.seed ? std::to_string(*r.seed) : std::string()) << ','
        << num(r.fro_abs) << ',' << num(r.fro_rel) << ',' << num(r.probe_residual) << ','
        << num(r.system_residual) << ',' << r.iterations << ',' << (r.converged ? 1 : 0) << ','
        << num(r.rho) << ',' << num(r.delta_target) << ',' << (r.delta_met ? 1 : 0) << ','
        << num(r.m_prime) << ',' << num(r.x_prime_norm) << ',' << num(r.x_dprime_norm) << ','
        << num(r.x_tprime_norm) << ',' << num(r.time_build_s) << ',' << num(r.time_solve_s)
        << ',' << num(r.time_exact_s) << ',' << num(r.time_iterations_s) << ','
        << num(r.time_per_iteration_s());
    for (auto const& b : r.baseline) out << ',' << num(b.fro_rel);
    out << '\n';
  }
  return out.str();
}

void write_text_file(std::filesystem::path const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace amm
