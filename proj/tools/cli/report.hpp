// Copyright 2026 The qgxor Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qgxor::cli {

using Json = nlohmann::json;

enum class Format { Json, Csv };

[[nodiscard]] Format parse_format(const std::string& name);

/// Header row plus data rows, all pre-rendered as strings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

/// RFC-4180 field quoting: fields containing a comma, quote, CR or LF are
/// wrapped in quotes with embedded quotes doubled.
[[nodiscard]] std::string csv_escape(const std::string& field);
void write_csv(std::ostream& out, const CsvTable& table);

/// 17 significant digits.
[[nodiscard]] std::string format_double(double value);

struct ReportMeta {
    std::string tool = "qgxor";
    std::string version;
    std::string command;
    std::optional<std::uint64_t> seed;
    Json config = Json::object();
    double elapsed_ms = 0.0;

    friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

/// {meta: {...}, data: {...}} plus the tabular view used for CSV output.
/// Reruns with identical configuration and seed produce identical `data`
/// and `table`; only `meta.elapsed_ms` varies.
struct RunReport {
    ReportMeta meta;
    Json data = Json::object();
    CsvTable table;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

void to_json(Json& j, const ReportMeta& meta);
void from_json(const Json& j, ReportMeta& meta);

/// The JSON document holds meta and data; the CSV table is derived data and
/// is not part of it.
[[nodiscard]] Json report_to_json(const RunReport& report);
[[nodiscard]] RunReport report_from_json(const Json& doc);

void emit(std::ostream& out, const RunReport& report, Format format);

}  // namespace qgxor::cli
