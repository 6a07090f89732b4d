#include "phylotoric/volume_plot.hpp"

#include "phylotoric/ehrhart.hpp"

#include <fstream>
#include <iomanip>
#include <stdexcept>

namespace phylotoric {

VolumePlotFiles write_volume_plot(const std::filesystem::path& stem, int r, int samples) {
  if (r < 2) throw std::invalid_argument("volume plot needs r >= 2");
  if (samples < 1) throw std::invalid_argument("volume plot needs at least one sample interval");
  VolumePlotFiles files{stem, stem};
  files.csv += ".csv";
  files.script += ".gp";

  const auto low = volume_distribution(2);
  const auto high = volume_distribution(r);
  std::ofstream csv(files.csv);
  if (!csv) throw std::runtime_error("cannot write " + files.csv.string());
  csv << "t,delta2,delta" << r << "\n" << std::setprecision(10);
  for (int i = 0; i <= samples; ++i) {
    const Rational t(i, samples);
    csv << t.convert_to<double>() << "," << low(t).convert_to<double>() << "," << high(t).convert_to<double>() << "\n";
  }
  if (!csv) throw std::runtime_error("failed writing " + files.csv.string());

  std::ofstream gp(files.script);
  if (!gp) throw std::runtime_error("cannot write " + files.script.string());
  const std::string name = files.csv.filename().string();
  gp << "set datafile separator \",\"\n"
     << "set key autotitle columnhead\n"
     << "set xlabel \"t\"\n"
     << "set ylabel \"density\"\n"
     << "set xrange [0:1]\n"
     << "plot \"" << name << "\" using 1:2 with lines lw 2, \\\n"
     << "     \"" << name << "\" using 1:3 with lines lw 2\n";
  if (!gp) throw std::runtime_error("failed writing " + files.script.string());
  return files;
}

}  // namespace phylotoric
