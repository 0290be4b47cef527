#include "dpwave/output.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace dpwave {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t j = 0; j < t.columns.size(); ++j) {
    if (j) os << ',';
    os << t.columns[j];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << format_g17(row[j]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = t.name;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (double v : row) r.push_back(v);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  os << j.dump(2) << '\n';
}

void write_plot_script(const std::string& data_path, const std::string& script_path,
                       const Table& t, const std::string& xlabel, const std::string& ylabel) {
  std::ofstream os(script_path);
  os << "# plot script for " << data_path << "\n";
  os << "set datafile separator ','\n";
  os << "set key autotitle columnhead\n";
  os << "set xlabel '" << xlabel << "'\n";
  os << "set ylabel '" << ylabel << "'\n";
  os << "plot";
  for (std::size_t j = 1; j < t.columns.size(); ++j) {
    if (j > 1) os << ",";
    os << " '" << data_path << "' using 1:" << (j + 1) << " with lines";
  }
  os << "\n";
}

}  // namespace dpwave
