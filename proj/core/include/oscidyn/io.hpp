#pragma once

#include <string>
#include <vector>

namespace oscidyn {

// Column-oriented numeric table with provenance comment lines.
struct Table {
    std::vector<std::string> comments;  // emitted as '# ...' lines
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// 13-significant-digit scientific notation, locale independent ("%.12e").
std::string format_field(double v);

// Comma-separated, '#' comment lines first, then the column header, then rows.
void write_csv(const std::string& path, const Table& t);

// Parses files produced by write_csv. Parse-then-emit is byte stable.
Table read_csv(const std::string& path);

// Same table as a JSON document {"comments", "columns", "rows"}.
void write_json(const std::string& path, const Table& t);

} // namespace oscidyn
