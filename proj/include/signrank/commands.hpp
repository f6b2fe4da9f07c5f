#ifndef SIGNRANK_COMMANDS_HPP
#define SIGNRANK_COMMANDS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "signrank/minrank.hpp"

namespace signrank::cli {

/// 0 success, 1 verification failure, 2 usage or IO error, 3 inconclusive.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kInconclusive = 3 };

struct CommandOutcome {
  int exit_code = kOk;
  std::vector<std::string> artifacts_written;
  std::string summary;
};

/// Files written by `perles build`, in write order (figure.svg comes last).
inline constexpr std::array<const char*, 12> kBundleFiles = {
    "incidence.json", "realization.json", "D.json",         "C.json",      "E.json",     "B.json",
    "A.json",         "patterns.json",    "certificate_q.json", "graph.json", "report.json", "figure.svg"};

CommandOutcome cmd_perles_build(const std::string& out_dir);
/// Reloads a bundle directory and reruns every check on the stored data.
CommandOutcome cmd_perles_verify(const std::string& bundle_dir);
CommandOutcome cmd_realize(const std::string& incidence_path, const std::string& field, const std::string& out_path);
CommandOutcome cmd_rationalize(const std::string& matrix_path, const std::string& lo, const std::string& hi,
                               const std::string& out_path);
/// `out_path` may be empty, in which case only the summary is produced.
CommandOutcome cmd_minrank(const std::string& pattern_path, const SearchBudget& budget, const std::string& out_path);
CommandOutcome cmd_render(const std::string& incidence_path, const std::string& realization_path,
                          const std::string& out_path);

/// Seed from SIGNRANK_SEED when set and valid, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 1);

}  // namespace signrank::cli

#endif  // SIGNRANK_COMMANDS_HPP
