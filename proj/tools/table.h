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

// Column-ordered result tables and their CSV / JSON renderings.

#ifndef HMS_TOOLS_TABLE_H
#define HMS_TOOLS_TABLE_H

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hms/analysis.h"

namespace hms::cli {

using Cell = std::variant<double, bool, uint64_t, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Meta {
    std::string command;
    std::optional<uint64_t> seed;
    std::map<std::string, std::string> flags;
};

/// Doubles use 17 significant digits; booleans are true/false.
std::string format_cell(const Cell &cell);

/// Header line followed by one line per row, '\n' terminated.
std::string to_csv(const Table &table);

/// {"meta": {...}, "rows": [{column: value, ...}, ...]}
std::string to_json(const Table &table, const Meta &meta);

inline const std::vector<std::string> kScanColumns = {
    "epsilon", "theta", "p1", "p2", "p3", "p4", "E", "compatible", "separated", "classical_joint",
};

Table scan_table(const std::vector<ScanRow> &rows);

/// Parses CSV written by to_csv(scan_table(...)). Throws ValidationError on a
/// wrong header or malformed field.
std::vector<ScanRow> read_scan_csv(std::istream &in);

}  // namespace hms::cli

#endif  // HMS_TOOLS_TABLE_H
