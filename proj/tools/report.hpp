#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ghseries::cli {

enum class Format { Json, Csv, Text };

/// Throws InputError for anything but json, csv or text.
Format parse_format(std::string_view name);

/// Tabular command output: {command, params, rows, summary}. Column names are
/// carried in params["columns"]; every cell is a string.
struct Report {
    std::string command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    std::optional<std::string> timestamp;
};

std::string render(const Report& report, Format format);

} // namespace ghseries::cli
