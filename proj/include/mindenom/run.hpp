#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "mindenom/holonomy.hpp"

namespace mindenom {

inline constexpr const char* code_version = "1.0.0";
inline constexpr int manifest_schema_version = 1;

enum class Experiment { Theorem12, Theorem14, Theorem55, Theorem15, SiegelCheck, OracleSuite };

const std::vector<std::string>& experiment_names();
std::string experiment_name(Experiment e);
/// Throws std::invalid_argument for an unknown id.
Experiment parse_experiment(const std::string& id);

struct RunConfig {
    Experiment experiment = Experiment::Theorem12;
    std::size_t m = 1;
    std::size_t n_dim = 1;
    std::vector<std::string> deltas{"1e-2", "1e-4", "1e-6"};
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    std::string output = ".";
    SurfaceCone cone = SurfaceCone::Symmetric;
    std::string origami = "h=(1)\nv=(1)";
    long alpha = 0;  // 0 selects the smallest alpha with h_alpha in the Veech group
    std::uint64_t max_q = 0;       // 0 selects the default enumeration caps
    std::int64_t max_shell = 0;
};

/// Throws std::invalid_argument on a count below 1, a delta outside (0, 1) or bad dimensions.
void validate(const RunConfig& config);

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_invalid = 2, exit_cap = 3 };

/// Runs the experiment and writes samples.csv, cdf.csv and manifest.json into config.output.
/// On a cap failure the partially written files are removed.
int run(const RunConfig& config, std::ostream& log);

/// Overlays the curves of the given cdf.csv files into an SVG and a merged CSV.
int emit_plot_data(const std::vector<std::string>& cdf_files, const std::string& svg_path,
                   const std::string& csv_path, std::ostream& log);

} // namespace mindenom
