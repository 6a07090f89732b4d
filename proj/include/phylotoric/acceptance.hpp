#pragma once

// The acceptance suite: eleven end-to-end checks, each reported with a short
// detail line. Shared by the acceptance test binary and `phylotoric verify`.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace phylotoric {

inline constexpr std::uint64_t default_seed = 20240229;

struct AcceptanceOptions {
  // Directory holding the checked-in golden files; empty selects
  // $PHYLOTORIC_GOLDEN_DIR, then the directory configured at build time.
  std::filesystem::path golden_dir;
  std::uint64_t seed = default_seed;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int criterion_count = 11;

// Runs criterion `id` in 1..criterion_count; exceptions become failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

}  // namespace phylotoric
