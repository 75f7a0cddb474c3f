#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cli {

/// Tabular payload shared by the csv and json emitters: column names plus
/// preformatted string fields, one vector per record.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Key/value pairs describing the invocation, placed before the records.
using Meta = std::vector<std::pair<std::string, std::string>>;

/// 12 significant digits, C locale; the shared rounding for every decimal
/// presentation column and svg coordinate.
std::string fmt12(double v);

std::string to_csv(const Table& table);

/// Structured text: {"subcommand": ..., meta..., "records": [{col: field}]}.
/// Fields that look like booleans or integers stay unquoted.
std::string to_json(const std::string& subcommand, const Meta& meta, const Table& table);

/// Minimal static vector documents in a fixed unit viewport.
std::string svg_polyline(const std::vector<std::pair<double, double>>& points);
std::string svg_bars(const std::vector<std::vector<std::pair<double, double>>>& levels);

/// Writes to the path, or to stdout when the path is empty. Returns false and
/// prints the failing path to stderr on I/O errors.
bool write_artifact(const std::string& path, const std::string& content);

}  // namespace cli
