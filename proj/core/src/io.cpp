#include "oscidyn/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oscidyn/errors.hpp"

namespace oscidyn {

std::string format_field(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

void write_csv(const std::string& path, const Table& t) {
    std::ostringstream out;
    for (const std::string& c : t.comments) out << "# " << c << "\n";
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        if (j) out << ",";
        out << t.columns[j];
    }
    out << "\n";
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size())
            throw IoError("row width " + std::to_string(row.size()) + " does not match " +
                          std::to_string(t.columns.size()) + " columns");
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ",";
            out << format_field(row[j]);
        }
        out << "\n";
    }

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << out.str();
    if (!f) throw IoError("write failed: " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

Table read_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for reading: " + path);

    Table t;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(f, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t skip = 1;
            if (skip < line.size() && line[skip] == ' ') ++skip;
            t.comments.push_back(line.substr(skip));
            continue;
        }
        if (!header_seen) {
            t.columns = split_fields(line);
            header_seen = true;
            continue;
        }
        const std::vector<std::string> fields = split_fields(line);
        if (fields.size() != t.columns.size())
            throw IoError(path + ":" + std::to_string(line_no) + ": expected " +
                          std::to_string(t.columns.size()) + " fields, got " +
                          std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& s : fields) {
            char* end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (end == s.c_str() || *end != '\0')
                throw IoError(path + ":" + std::to_string(line_no) + ": bad number '" + s + "'");
            row.push_back(v);
        }
        t.rows.push_back(std::move(row));
    }
    if (!header_seen) throw IoError(path + ": no header line");
    return t;
}

void write_json(const std::string& path, const Table& t) {
    nlohmann::ordered_json doc;
    doc["comments"] = t.comments;
    doc["columns"] = t.columns;
    doc["rows"] = t.rows;

    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << doc.dump(2) << "\n";
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace oscidyn
