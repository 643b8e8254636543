#pragma once

#include <string>
#include <vector>

#include "cyclekit/core_types.hpp"

namespace cyclekit {

// Columnar table with a one-line header. Values are written with enough
// digits (%.17g) to round-trip through text exactly.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string format_double(double value);

std::string csv_to_string(const CsvTable& table);
void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

// Series files use the fixed header "t,value" with integer time stamps.
void write_series_csv(const std::string& path, const SeriesPath& series);
SeriesPath read_series_csv(const std::string& path);

}  // namespace cyclekit
