#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "magemit/errors.hpp"

namespace magemit {

using Cell = std::variant<double, long long, std::string>;

/// Column-labelled result rows, the common currency between the command
/// runners and the CSV/JSON emitters.
struct OutputTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };

namespace detail {

/// Scientific notation with 9 significant digits, '.' decimal separator.
inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

inline std::string cell_to_csv(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
    return std::get<std::string>(cell);
}

inline nlohmann::ordered_json cell_to_json(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return *d;
    if (const auto* i = std::get_if<long long>(&cell)) return *i;
    return std::get<std::string>(cell);
}

} // namespace detail

inline void emit_csv(const OutputTable& table, std::ostream& os) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << detail::cell_to_csv(row[c]) << (c + 1 < row.size() ? "," : "");
        os << '\n';
    }
}

inline void emit_json(const OutputTable& table, const nlohmann::ordered_json& metadata,
                      std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["metadata"] = metadata;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jrow;
        for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c)
            jrow[table.columns[c]] = detail::cell_to_json(row[c]);
        doc["rows"].push_back(std::move(jrow));
    }
    os << doc.dump(2) << '\n';
}

/// Write the table to `path` (or stdout when unset). Same bytes for the same
/// inputs every time; the only environment-dependent content is whatever the
/// caller put into `metadata`.
inline void emit_table(const OutputTable& table, OutputFormat format,
                       const std::optional<std::string>& path,
                       const nlohmann::ordered_json& metadata = {}) {
    if (table.rows.empty()) throw error("emit_table: refusing to write an empty table");
    std::ofstream file;
    if (path) {
        file.open(*path, std::ios::binary);
        if (!file) throw io_error("emit_table: cannot open '" + *path + "' for writing");
    }
    std::ostream& os = path ? static_cast<std::ostream&>(file) : std::cout;
    if (format == OutputFormat::csv)
        emit_csv(table, os);
    else
        emit_json(table, metadata, os);
    os.flush();
    if (path && !file) throw io_error("emit_table: write to '" + *path + "' failed");
}

} // namespace magemit
