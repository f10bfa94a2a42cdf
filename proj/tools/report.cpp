#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "ghseries/errors.hpp"

namespace ghseries::cli {

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["command"] = r.command;
    doc["params"] = r.params;
    doc["params"]["columns"] = r.columns;
    doc["rows"] = r.rows;
    doc["summary"] = r.summary;
    if (r.timestamp) {
        doc["timestamp"] = *r.timestamp;
    }
    return doc.dump(2) + "\n";
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        os << (i ? "," : "") << csv_cell(r.columns[i]);
    }
    os << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << csv_cell(row[i]);
        }
        os << '\n';
    }
    for (const auto& [key, value] : r.summary.items()) {
        os << "# " << key << '=' << scalar_text(value) << '\n';
    }
    if (r.timestamp) {
        os << "# timestamp=" << *r.timestamp << '\n';
    }
    return os.str();
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << r.command << '\n';
    for (const auto& [key, value] : r.params.items()) {
        if (value.is_object()) {
            for (const auto& [sub, text] : value.items()) {
                os << "  " << key << '.' << sub << ": " << scalar_text(text) << '\n';
            }
        } else {
            os << "  " << key << ": " << scalar_text(value) << '\n';
        }
    }

    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        width[i] = r.columns[i].size();
        for (const auto& row : r.rows) {
            width[i] = std::max(width[i], row[i].size());
        }
    }
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "  " : "") << cells[i];
            if (i + 1 < cells.size()) {
                os << std::string(width[i] - cells[i].size(), ' ');
            }
        }
        os << '\n';
    };
    os << '\n';
    line(r.columns);
    for (const auto& row : r.rows) {
        line(row);
    }
    os << '\n';
    for (const auto& [key, value] : r.summary.items()) {
        os << key << ": " << scalar_text(value) << '\n';
    }
    if (r.timestamp) {
        os << "timestamp: " << *r.timestamp << '\n';
    }
    return os.str();
}

} // namespace

Format parse_format(std::string_view name) {
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "text") {
        return Format::Text;
    }
    throw InputError("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string render(const Report& report, Format format) {
    switch (format) {
    case Format::Json:
        return render_json(report);
    case Format::Csv:
        return render_csv(report);
    case Format::Text:
        return render_text(report);
    }
    return {};
}

} // namespace ghseries::cli
