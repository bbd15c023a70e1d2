#ifndef ORBITKIT_COMMANDS_HPP
#define ORBITKIT_COMMANDS_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "orbitkit/scenario.hpp"

namespace orbitkit {

/// Optional CLI flag overrides applied on top of the scenario file.
struct CommandOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> words;
  std::optional<double> radius;
  int bracket_depth = 2;
  std::string field; // classify: restrict to one field label
};

/// Every command writes report.json (plus command-specific artifacts) into
/// out_dir and returns the report. Verdict failures are successful runs
/// (exit 0); input problems, invariance violations during reduce, and
/// insufficient data surface as InputError / NotInvariantError /
/// InsufficientSamplesError for the CLI to map to exit codes 2 / 3 / 4.
nlohmann::ordered_json cmd_check(const Scenario& sc, const std::filesystem::path& out_dir);
nlohmann::ordered_json cmd_reduce(const Scenario& sc, const std::filesystem::path& out_dir);
nlohmann::ordered_json cmd_reach(const Scenario& sc, const std::filesystem::path& out_dir,
                                 const CommandOverrides& ov = {});
nlohmann::ordered_json cmd_classify(const Scenario& sc, const std::filesystem::path& out_dir,
                                    const CommandOverrides& ov = {});
nlohmann::ordered_json cmd_orbit_dim(const Scenario& sc, const std::filesystem::path& out_dir,
                                     const CommandOverrides& ov = {});

/// Residual threshold separating pass from fail in check reports.
inline constexpr double kCheckThreshold = 1e-6;

} // namespace orbitkit

#endif
