#pragma once

#include <filesystem>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "amm/harness.hpp"

namespace amm {

inline constexpr int kReportVersion = 1;

/// One entry of the "runs" array.
nlohmann::json to_json(ErrorReport const& report);

/// {"version": 1, "runs": [...]}
nlohmann::json report_json(std::span<ErrorReport const> runs);

/// report_json(result.runs) plus a "summary" object with per-size medians
/// and the per-doubling time ratios.
nlohmann::json report_json(SweepResult const& result);

/// One row per run. Timing columns are prefixed "time_"; one
/// "baseline_s<k>_fro_rel" column per sampled s, none when there are no
/// baselines.
std::string report_csv(std::span<ErrorReport const> runs);

void write_text_file(std::filesystem::path const& path, std::string const& text);

}  // namespace amm
