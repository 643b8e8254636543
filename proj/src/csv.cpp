#include "cyclekit/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclekit {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_field(const std::string& field, const std::string& path) {
    try {
        size_t used = 0;
        const double value = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
        return value;
    } catch (const std::exception&) {
        throw std::runtime_error(path + ": malformed numeric field '" + field + "'");
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string csv_to_string(const CsvTable& table) {
    std::string out;
    for (size_t j = 0; j < table.columns.size(); ++j) {
        if (j) out += ',';
        out += table.columns[j];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::runtime_error("csv row width does not match header");
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += format_double(row[j]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << csv_to_string(table);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (auto& name : split_line(line)) table.columns.push_back(name);
    if (table.columns.empty()) throw std::runtime_error(path + ": missing header");
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_line(line);
        if (fields.size() != table.columns.size())
            throw std::runtime_error(path + ": row width does not match header");
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& field : fields) row.push_back(parse_field(field, path));
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_series_csv(const std::string& path, const SeriesPath& series) {
    CsvTable table;
    table.columns = {"t", "value"};
    table.rows.reserve(series.values.size());
    for (size_t i = 0; i < series.values.size(); ++i)
        table.rows.push_back({static_cast<double>(series.start_time + static_cast<std::int64_t>(i)),
                              series.values[i]});
    write_csv(path, table);
}

SeriesPath read_series_csv(const std::string& path) {
    const CsvTable table = read_csv(path);
    if (table.columns.size() != 2 || table.columns[0] != "t" || table.columns[1] != "value")
        throw std::runtime_error(path + ": expected header 't,value'");
    SeriesPath series;
    if (table.rows.empty()) return series;
    series.start_time = static_cast<std::int64_t>(table.rows.front()[0]);
    series.values.reserve(table.rows.size());
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const auto expected = series.start_time + static_cast<std::int64_t>(i);
        if (static_cast<std::int64_t>(table.rows[i][0]) != expected)
            throw std::runtime_error(path + ": time stamps must be consecutive integers");
        series.values.push_back(table.rows[i][1]);
    }
    return series;
}

}  // namespace cyclekit
