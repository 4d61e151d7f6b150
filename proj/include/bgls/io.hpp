#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bgls {

inline constexpr const char* kVersionString = "0.1.0";

// Full-precision decimal, round-trip safe for double.
std::string format_g17(double v);

enum class OutputFormat { json, csv };

// Metadata echoed into every emitted artifact so a run is reproducible
// from its output alone.
struct TableHeader {
    std::string quantity;
    std::string grid_kind = "none";
    double tolerance = 0.0;
};

struct Table {
    TableHeader header;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // each row matches columns in length
    std::vector<std::pair<std::string, std::string>> notes;  // summary lines
};

// CSV: "# quantity, grid_kind, tolerance, version" header row, column row,
// data rows, then one "# key, value" line per note. JSON: a single object
// with the same fields. Both are byte-deterministic for a fixed table.
void write_table(std::ostream& os, const Table& t, OutputFormat fmt);

// One log-grid sweep with same-length values. Throws std::invalid_argument
// on an empty grid or a length mismatch.
void emit_sweep(std::ostream& os, const TableHeader& header,
                const std::vector<double>& grid, const std::vector<double>& values,
                OutputFormat fmt, const std::string& grid_column = "x",
                const std::string& value_column = "value");

}  // namespace bgls
