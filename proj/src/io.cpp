#include "bgls/io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace bgls {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void write_csv(std::ostream& os, const Table& t) {
    os << "# " << t.header.quantity << ", " << t.header.grid_kind << ", "
       << format_g17(t.header.tolerance) << ", " << kVersionString << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) os << ",";
        os << t.columns[i];
    }
    os << "\n";
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::invalid_argument("write_table: row width does not match columns");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "\n";
    }
    for (const auto& [key, value] : t.notes) os << "# " << key << ", " << value << "\n";
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json j;
    j["quantity"] = t.header.quantity;
    j["grid_kind"] = t.header.grid_kind;
    j["tolerance"] = t.header.tolerance;
    j["version"] = kVersionString;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw std::invalid_argument("write_table: row width does not match columns");
        rows.push_back(row);
    }
    j["rows"] = std::move(rows);
    if (!t.notes.empty()) {
        nlohmann::ordered_json notes;
        for (const auto& [key, value] : t.notes) notes[key] = value;
        j["notes"] = std::move(notes);
    }
    os << j.dump(2) << "\n";
}

}  // namespace

void write_table(std::ostream& os, const Table& t, OutputFormat fmt) {
    if (fmt == OutputFormat::csv)
        write_csv(os, t);
    else
        write_json(os, t);
}

void emit_sweep(std::ostream& os, const TableHeader& header, const std::vector<double>& grid,
                const std::vector<double>& values, OutputFormat fmt,
                const std::string& grid_column, const std::string& value_column) {
    if (grid.empty()) throw std::invalid_argument("emit_sweep: empty grid");
    if (grid.size() != values.size())
        throw std::invalid_argument("emit_sweep: grid and values differ in length");
    Table t;
    t.header = header;
    t.columns = {grid_column, value_column};
    t.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        t.rows.push_back({format_g17(grid[i]), format_g17(values[i])});
    write_table(os, t, fmt);
}

}  // namespace bgls
