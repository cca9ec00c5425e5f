// Copyright 2026 The hms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "table.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "hms/error.h"
#include "hms/version.h"
#include "json.hpp"

namespace hms::cli {

namespace {

struct CellFormatter {
    std::string operator()(double v) const { return fmt::format("{:.17g}", v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(uint64_t v) const { return fmt::format("{}", v); }
    std::string operator()(const std::string &v) const { return v; }
};

struct CellToJson {
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(const std::string &v) const { return v; }
};

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

double parse_double(const std::string &text) {
    errno = 0;
    char *end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
        throw ValidationError("malformed number '" + text + "'");
    }
    return v;
}

bool parse_bool(const std::string &text) {
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    throw ValidationError("malformed boolean '" + text + "'");
}

}  // namespace

std::string format_cell(const Cell &cell) { return std::visit(CellFormatter{}, cell); }

std::string to_csv(const Table &table) {
    std::string out = fmt::format("{}\n", fmt::join(table.columns, ","));
    std::vector<std::string> fields;
    for (const auto &row : table.rows) {
        fields.clear();
        for (const auto &cell : row) {
            fields.push_back(format_cell(cell));
        }
        out += fmt::format("{}\n", fmt::join(fields, ","));
    }
    return out;
}

std::string to_json(const Table &table, const Meta &meta) {
    nlohmann::ordered_json doc;
    doc["meta"]["version"] = kVersion;
    doc["meta"]["command"] = meta.command;
    doc["meta"]["seed"] = meta.seed ? nlohmann::ordered_json(*meta.seed) : nlohmann::ordered_json(nullptr);
    doc["meta"]["flags"] = nlohmann::ordered_json::object();
    for (const auto &[name, value] : meta.flags) {
        doc["meta"]["flags"][name] = value;
    }
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (size_t k = 0; k < table.columns.size(); ++k) {
            obj[table.columns[k]] = std::visit(CellToJson{}, row[k]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

Table scan_table(const std::vector<ScanRow> &rows) {
    Table table{kScanColumns, {}};
    table.rows.reserve(rows.size());
    for (const auto &r : rows) {
        table.rows.push_back({r.epsilon, r.theta, r.p1, r.p2, r.p3, r.p4, r.correlation, r.compatible, r.separated,
                              r.classical_joint});
    }
    return table;
}

std::vector<ScanRow> read_scan_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != kScanColumns) {
        throw ValidationError("missing or unexpected scan CSV header");
    }
    std::vector<ScanRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto f = split_csv_line(line);
        if (f.size() != kScanColumns.size()) {
            throw ValidationError("scan CSV row has " + std::to_string(f.size()) + " fields");
        }
        rows.push_back({
            .epsilon = parse_double(f[0]),
            .theta = parse_double(f[1]),
            .p1 = parse_double(f[2]),
            .p2 = parse_double(f[3]),
            .p3 = parse_double(f[4]),
            .p4 = parse_double(f[5]),
            .correlation = parse_double(f[6]),
            .compatible = parse_bool(f[7]),
            .separated = parse_bool(f[8]),
            .classical_joint = parse_bool(f[9]),
        });
    }
    return rows;
}

}  // namespace hms::cli
