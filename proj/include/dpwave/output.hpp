#pragma once

#include <ostream>
#include <string>
#include <vector>

// Deterministic CSV/JSON emission for the CLI datasets.  CSV uses a
// header row, '.' decimals, 17 significant digits.  JSON output keeps
// insertion order and carries a schema_version field.

namespace dpwave {

inline constexpr int kSchemaVersion = 1;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::initializer_list<double> vals) { rows.emplace_back(vals); }
};

std::string format_g17(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

// Data file plus a generic gnuplot-style script next to it.
void write_plot_script(const std::string& data_path, const std::string& script_path,
                       const Table& t, const std::string& xlabel, const std::string& ylabel);

}  // namespace dpwave
