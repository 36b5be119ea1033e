// output.hpp — Deterministic CSV/JSON tables with a run manifest
//
// Numbers are rounded to 12 significant digits once, in format_number; the
// CSV text and the JSON value are both derived from that rounded double, so
// the two formats agree exactly.

#pragma once

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jchm/version.hpp"

namespace jchm::io {

enum class OutputFormat { csv, json };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

/// %.12g with negative zero folded to zero.
inline std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    if (std::string_view(buf) == "-0") return "0";
    return buf;
}

/// The double that format_number(x) denotes.
inline double rounded(double x) {
    const std::string s = format_number(x);
    return std::strtod(s.c_str(), nullptr);
}

/// A table cell: a number, an integer, text, or empty (missing value).
class Cell {
public:
    Cell() = default;
    Cell(double v) : kind_(Kind::number), number_(v) {}
    Cell(int v) : kind_(Kind::integer), integer_(v) {}
    Cell(long long v) : kind_(Kind::integer), integer_(v) {}
    Cell(std::size_t v) : kind_(Kind::integer), integer_(static_cast<long long>(v)) {}
    Cell(std::string v) : kind_(Kind::text), text_(std::move(v)) {}
    Cell(const char* v) : kind_(Kind::text), text_(v) {}

    static Cell empty() { return {}; }

    std::string csv() const {
        switch (kind_) {
            case Kind::number: return format_number(number_);
            case Kind::integer: return std::to_string(integer_);
            case Kind::text: return text_;
            case Kind::empty: break;
        }
        return "";
    }

    nlohmann::ordered_json json() const {
        switch (kind_) {
            case Kind::number:
                if (!std::isfinite(number_)) return nullptr;
                return rounded(number_);
            case Kind::integer: return integer_;
            case Kind::text: return text_;
            case Kind::empty: break;
        }
        return nullptr;
    }

private:
    enum class Kind { empty, number, integer, text };
    Kind kind_{Kind::empty};
    double number_{0.0};
    long long integer_{0};
    std::string text_;
};

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;  // insertion order
    std::vector<std::string> notes;
    std::string version{kVersion};
    std::optional<double> duration_seconds;  // emitted only when set

    void add(std::string key, std::string value) { parameters.emplace_back(std::move(key), std::move(value)); }
    void add(std::string key, double value) { parameters.emplace_back(std::move(key), format_number(value)); }
    void add(std::string key, int value) { parameters.emplace_back(std::move(key), std::to_string(value)); }
    void note(std::string text) { notes.push_back(std::move(text)); }
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size()) throw std::logic_error("row width does not match header");
        rows.push_back(std::move(row));
    }
};

inline void write_csv(std::ostream& out, const RunManifest& m, const Table& t) {
    out << "# command: " << m.command << '\n';
    out << "# version: " << m.version << '\n';
    for (const auto& [k, v] : m.parameters) out << "# param " << k << ": " << v << '\n';
    for (const auto& n : m.notes) out << "# note: " << n << '\n';
    if (m.duration_seconds) out << "# duration_seconds: " << format_number(*m.duration_seconds) << '\n';

    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].csv();
        out << '\n';
    }
}

inline nlohmann::ordered_json to_json(const RunManifest& m, const Table& t) {
    nlohmann::ordered_json manifest;
    manifest["command"] = m.command;
    manifest["version"] = m.version;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    manifest["parameters"] = params;
    manifest["notes"] = m.notes;
    if (m.duration_seconds) manifest["duration_seconds"] = rounded(*m.duration_seconds);

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& c : row) r.push_back(c.json());
        rows.push_back(std::move(r));
    }

    nlohmann::ordered_json doc;
    doc["manifest"] = std::move(manifest);
    doc["columns"] = t.columns;
    doc["rows"] = std::move(rows);
    return doc;
}

inline void write_json(std::ostream& out, const RunManifest& m, const Table& t) {
    out << to_json(m, t).dump(2) << '\n';
}

inline void write(std::ostream& out, OutputFormat f, const RunManifest& m, const Table& t) {
    if (f == OutputFormat::csv)
        write_csv(out, m, t);
    else
        write_json(out, m, t);
}

}  // namespace jchm::io
