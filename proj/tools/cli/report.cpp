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

#include "report.hpp"

#include <cstdio>

#include "qgxor/errors.hpp"

namespace qgxor::cli {

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw InvalidArgument("unknown output format '" + name + "' (expected json or csv)");
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& out, const CsvTable& table) {
    auto write_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << csv_escape(row[i]);
        }
        out << "\r\n";
    };
    write_row(table.header);
    for (const auto& row : table.rows) write_row(row);
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void to_json(Json& j, const ReportMeta& meta) {
    j = Json{{"tool", meta.tool},
             {"version", meta.version},
             {"command", meta.command},
             {"seed", meta.seed ? Json(*meta.seed) : Json(nullptr)},
             {"config", meta.config},
             {"elapsed_ms", meta.elapsed_ms}};
}

void from_json(const Json& j, ReportMeta& meta) {
    j.at("tool").get_to(meta.tool);
    j.at("version").get_to(meta.version);
    j.at("command").get_to(meta.command);
    const Json& seed = j.at("seed");
    meta.seed = seed.is_null() ? std::nullopt : std::optional<std::uint64_t>(seed.get<std::uint64_t>());
    meta.config = j.at("config");
    j.at("elapsed_ms").get_to(meta.elapsed_ms);
}

Json report_to_json(const RunReport& report) { return Json{{"meta", report.meta}, {"data", report.data}}; }

RunReport report_from_json(const Json& doc) {
    RunReport report;
    report.meta = doc.at("meta").get<ReportMeta>();
    report.data = doc.at("data");
    return report;
}

void emit(std::ostream& out, const RunReport& report, Format format) {
    if (format == Format::Json) {
        out << report_to_json(report).dump(2) << '\n';
    } else {
        write_csv(out, report.table);
    }
}

}  // namespace qgxor::cli
