#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "numrad/norms.hpp"
#include "numrad/report.hpp"

namespace numrad::cli {

enum class Command { compute, verify, paper_example, validate_norms };

struct RunConfig {
    Command command = Command::compute;
    std::optional<std::filesystem::path> matrix_path;
    std::optional<std::string> norm_id;  // unset: op for compute, the suite set for verify
    std::vector<std::string> ensemble_ids;
    std::vector<std::string> checks;
    std::optional<int> trials;  // unset: 100 for verify, 30 for validate-norms
    std::uint64_t seed = 2024;
    std::optional<double> tol;  // unset: 1e-9, or 1e-8 for paper-example
    std::optional<std::filesystem::path> out_path;
    Format format = Format::human;
    int threads = 1;
};

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

// Parses argv and dispatches. Reports go to `out` (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Throws ParseError / InvalidArgument on bad configuration.
void validate(const RunConfig& config);

// The suite a verify run executes for `config`.
SuiteConfig suite_config(const RunConfig& config);

int cmd_compute(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_paper_example(const RunConfig& config, std::ostream& out);
int cmd_validate_norms(const RunConfig& config, std::ostream& out);

// validate-norms over an explicit registry; dimensions 2, 4 and 8.
int validate_registry(const std::vector<NormSpec>& registry, const RunConfig& config,
                      std::ostream& out);

inline constexpr int kValidateTrials = 30;

}  // namespace numrad::cli
