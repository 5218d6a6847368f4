#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "hartogs/checks.hpp"

namespace hartogs::scenario {

// exit codes of the scenario runner (also the CLI contract)
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericFailure = 3;

struct RunOverrides {
  std::optional<double> quad_tol;
  std::optional<std::size_t> node_cap;
  std::optional<std::uint64_t> seed;
};

// parsing helpers shared with tests
CPoint parse_cpoint(const nlohmann::json& j);
Box parse_box(const nlohmann::json& j);
DomainSpec parse_domain(const nlohmann::json& j);
CompactSpec parse_compact(const nlohmann::json& j, const DomainSpec* omega_for_clip = nullptr);
PlaneSlice parse_plane(const nlohmann::json& j, const CPoint& base);

nlohmann::ordered_json report_to_json(const checks::CheckReport& rep);

// Loads a scenario config, executes its tasks, writes report.json plus any
// task CSVs under out_dir/<scenario_id>/. Returns an exit code; config
// errors produce no output files.
int run_scenario(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                 const RunOverrides& overrides = {});

// Runs every *.json under suite_dir (sorted), writes per-scenario outputs
// and a summary.csv; the most severe exit code wins (2 > 3 > 1 > 0).
int verify_all(const std::filesystem::path& suite_dir, const std::filesystem::path& out_dir,
               const RunOverrides& overrides = {});

// Runs the scenario's evaluate-grid task and writes the slice CSV to
// out_path (columns re, im, companion_re, companion_im, reference_re,
// reference_im, abs_err, status).
int dump_grid(const std::filesystem::path& config_path, const std::filesystem::path& out_path,
              const RunOverrides& overrides = {});

}  // namespace hartogs::scenario
