#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gravcat/config.hpp"

namespace gravcat {

/// Rows are in lexicographic sweep order (outer axis slowest).
struct ResultTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

struct RunOptions {
  unsigned workers = 1; ///< 0 means one per hardware thread
};

/// Builds the thermal state at every grid point, applies the configured
/// channel and evaluates the requested outputs. Columns are the swept
/// parameters (outer first) followed by the outputs in alphabetical order.
/// A failing grid point aborts the run; the rethrown error keeps its category
/// and names the point. The table does not depend on `workers`.
ResultTable run_scenario(const SweepConfig& cfg, const RunOptions& options = {});

/// Column order used by run_scenario.
std::vector<std::string> table_header(const SweepConfig& cfg);

/// Header line, then one line per row; 12 significant digits; LF endings.
void write_csv(const ResultTable& table, std::ostream& out);

/// Writes the CSV to `path`. Throws IoError naming the path.
void emit_csv(const ResultTable& table, const std::string& path);

/// printf("%.12g") with negative zero rendered as 0. Throws NumericError for
/// non-finite values.
std::string format_number(double v);

struct Preset {
  std::string name;
  std::string figure;
  std::string description;
  SweepConfig config;
};

const std::vector<Preset>& list_presets();

/// Throws ConfigError for an unknown name.
const Preset& find_preset(const std::string& name);

/// gnuplot script plotting `csv_path` as produced for `preset`.
std::string gnuplot_script(const Preset& preset, const std::string& csv_path);

} // namespace gravcat
