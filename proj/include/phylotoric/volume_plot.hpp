#pragma once

// CSV samples of delta^2 and delta^r on [0,1] plus a gnuplot script that
// overlays them. The script names only the CSV, by file name, so the pair
// can be moved together.

#include <filesystem>

namespace phylotoric {

struct VolumePlotFiles {
  std::filesystem::path csv;
  std::filesystem::path script;
};

// Writes <stem>.csv (columns t, delta2, delta<r>) and <stem>.gp.
VolumePlotFiles write_volume_plot(const std::filesystem::path& stem, int r, int samples = 200);

}  // namespace phylotoric
