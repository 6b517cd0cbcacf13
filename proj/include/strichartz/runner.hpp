#pragma once

#include "strichartz/config.hpp"
#include "strichartz/experiments.hpp"

#include <map>
#include <string>

namespace strichartz {

/// Exit codes of the command-line layer.
enum ExitCode : int { kOk = 0, kUsageError = 1, kCheckFailed = 2 };

/// Apply the worker-count knob (0 = hardware parallelism).
void set_workers(int workers);

/// Parse the per-experiment sections of a config into typed configs.
KnappConfig knapp_config_from(const Config& cfg);
ProbeConfig probe_config_from(const Config& cfg, const std::string& section);
HomoConfig homo_config_from(const Config& cfg);

/// Each runner returns the emitted CSVs keyed by file name (also written
/// under out_dir when non-empty) and reports pass/fail via the exit code.
struct RunOutput {
    int exit_code = kOk;
    std::map<std::string, std::string> csv_files;
};

RunOutput run_exponents_command(int n, const std::string& p_text, const std::string& q_text,
                                std::string& stdout_text);
RunOutput run_knapp(const KnappConfig& cfg, double slope_tol, double residual_tol,
                    const std::string& out_dir);
RunOutput run_operator_probe(const ProbeConfig& cfg, double slope_tol, double residual_tol,
                             const std::string& out_dir);
RunOutput run_wave_probe(const ProbeConfig& cfg, double slope_tol, double residual_tol,
                         const std::string& out_dir);
RunOutput run_homo(const HomoConfig& cfg, const std::string& out_dir);
RunOutput run_bessel_audit(double c_max, const std::string& out_dir);

/// Dispatch on [experiment] kind. Writes CSVs under the configured
/// output_dir (overridable by the STRICHARTZ_OUT environment variable).
RunOutput run_from_config(const Config& cfg);

} // namespace strichartz
