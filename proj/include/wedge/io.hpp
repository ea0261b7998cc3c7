// Deterministic text output: JSON number/string formatting at 12
// significant digits, RFC-4180 CSV at 9 significant digits (CRLF line
// endings, minimal quoting), and serialization of entropy reports.  All
// formatting is locale-independent and bitwise-stable for fixed inputs.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedge/entropy.hpp"

namespace wedge::io {

/// JSON has no NaN/Inf literal; non-finite values serialize as null.
inline std::string format_json_number(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

/// CSV counterpart: non-finite values become empty fields.
inline std::string format_csv_number(double value) {
    if (!std::isfinite(value)) {
        return "";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

inline std::string json_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    out += "\"";
    return out;
}

/// RFC-4180 table: CRLF row endings, fields quoted only when they contain
/// a comma, quote, or line break.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    static std::string escape_field(const std::string& field) {
        if (field.find_first_of(",\"\r\n") == std::string::npos) {
            return field;
        }
        std::string out = "\"";
        for (char c : field) {
            if (c == '"') out += '"';
            out += c;
        }
        out += "\"";
        return out;
    }

    std::string serialize() const {
        std::string out;
        auto append_row = [&out](const std::vector<std::string>& fields) {
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i > 0) out += ',';
                out += escape_field(fields[i]);
            }
            out += "\r\n";
        };
        append_row(header);
        for (const auto& row : rows) {
            append_row(row);
        }
        return out;
    }
};

inline const char* route_name(EntropyRoute route) {
    return route == EntropyRoute::ClosedForm ? "closed_form" : "momentum";
}

/// One report as an ordered JSON object (two-space indent under `indent`).
inline std::string entropy_report_json(const EntropyReport& report,
                                       const std::string& indent) {
    const std::string inner = indent + "  ";
    std::string out = "{\n";
    auto field = [&](const char* name, const std::string& value,
                     bool last = false) {
        out += inner + json_quote(name) + ": " + value +
               (last ? "\n" : ",\n");
    };
    field("route", json_quote(route_name(report.route)));
    field("dimension", std::to_string(report.dimension));
    field("mass", format_json_number(report.mass));
    field("wedge_offset", format_json_number(report.wedge_offset));
    field("field_term", format_json_number(report.field_term));
    field("momentum_bulk", format_json_number(report.momentum_bulk));
    field("boundary_term", format_json_number(report.boundary_term));
    field("momentum_total", format_json_number(report.momentum_total));
    field("total", format_json_number(report.total));
    field("error_estimate", format_json_number(report.error_estimate));
    field("grid_extent", format_json_number(report.grid_extent));
    field("grid_points", std::to_string(report.grid_points), true);
    out += indent + "}";
    return out;
}

/// CSV row in the pinned column order:
/// offset, route, field_term, momentum_bulk, boundary_term, total,
/// error_estimate.
inline std::vector<std::string> entropy_report_csv_row(
    const EntropyReport& report) {
    return {format_csv_number(report.wedge_offset),
            route_name(report.route),
            format_csv_number(report.field_term),
            format_csv_number(report.momentum_bulk),
            format_csv_number(report.boundary_term),
            format_csv_number(report.total),
            format_csv_number(report.error_estimate)};
}

inline std::vector<std::string> entropy_csv_header() {
    return {"offset",        "route", "field_term", "momentum_bulk",
            "boundary_term", "total", "error_estimate"};
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    stream.write(content.data(),
                 static_cast<std::streamsize>(content.size()));
    if (!stream) {
        throw std::runtime_error("failed writing output file: " + path);
    }
}

}  // namespace wedge::io
