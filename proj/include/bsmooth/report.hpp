#pragma once

// Tabular experiment output: CSV and JSON with deterministic formatting.
// Reals are printed with 17 significant digits ('.' decimal separator), which
// round-trips doubles exactly; rows keep their construction order, so
// identical inputs produce byte-identical files.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace bsmooth {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

enum class ReportFormat { csv, json };

inline ReportFormat parse_format(const std::string& s) {
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw std::invalid_argument("format must be csv or json, got \"" + s + "\"");
}

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string cell_to_string(const Cell& c) {
    struct V {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const { return v; }
    };
    return std::visit(V{}, c);
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

} // namespace detail

inline std::string table_to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out += ',';
        out += detail::csv_escape(t.header[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.header.size())
            throw std::logic_error("table_to_csv: row width mismatch");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += detail::csv_escape(detail::cell_to_string(row[i]));
        }
        out += '\n';
    }
    return out;
}

inline std::string table_to_json(const Table& t) {
    std::string out = "[";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.size() != t.header.size())
            throw std::logic_error("table_to_json: row width mismatch");
        out += (r == 0) ? "\n" : ",\n";
        out += "  {";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ", ";
            out += '"' + detail::json_escape(t.header[i]) + "\": ";
            if (std::holds_alternative<std::string>(row[i]))
                out += '"' + detail::json_escape(std::get<std::string>(row[i])) + '"';
            else
                out += detail::cell_to_string(row[i]);
        }
        out += "}";
    }
    out += t.rows.empty() ? "]\n" : "\n]\n";
    return out;
}

// Parses CSV produced by table_to_csv; all cells come back as strings.
inline Table csv_to_table(const std::string& text) {
    Table t;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        std::vector<std::string> fields;
        std::string cur;
        bool quoted = false;
        for (;; ++pos) {
            if (pos >= text.size()) break;
            char ch = text[pos];
            if (quoted) {
                if (ch == '"') {
                    if (pos + 1 < text.size() && text[pos + 1] == '"') { cur += '"'; ++pos; }
                    else quoted = false;
                } else cur += ch;
            } else if (ch == '"') {
                quoted = true;
            } else if (ch == ',') {
                fields.push_back(std::move(cur));
                cur.clear();
            } else if (ch == '\n') {
                ++pos;
                break;
            } else if (ch != '\r') {
                cur += ch;
            }
        }
        fields.push_back(std::move(cur));
        if (first) {
            t.header.assign(fields.begin(), fields.end());
            first = false;
        } else {
            std::vector<Cell> row(fields.begin(), fields.end());
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

inline Table json_to_table(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    Table t;
    for (const auto& obj : j) {
        if (t.header.empty())
            for (auto it = obj.begin(); it != obj.end(); ++it) t.header.push_back(it.key());
        std::vector<Cell> row;
        for (const auto& key : t.header) {
            const auto& v = obj.at(key);
            if (v.is_string()) row.emplace_back(v.get<std::string>());
            else if (v.is_number_unsigned()) row.emplace_back(v.get<std::uint64_t>());
            else if (v.is_number_integer()) row.emplace_back(v.get<std::int64_t>());
            else row.emplace_back(v.get<double>());
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline void write_report(const Table& t, ReportFormat fmt, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_report: cannot open \"" + path + "\"");
    out << (fmt == ReportFormat::csv ? table_to_csv(t) : table_to_json(t));
    if (!out) throw std::runtime_error("write_report: write failed for \"" + path + "\"");
}

} // namespace bsmooth
