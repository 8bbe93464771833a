#include <charconv>
#include <cmath>
#include <string_view>

#include "hedges/cli.hpp"

namespace hedges::cli {

CsvError::CsvError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::string_view strip_cr(std::string_view s) {
    if (!s.empty() && s.back() == '\r') {
        s.remove_suffix(1);
    }
    return s;
}

double parse_value(std::string_view text, std::size_t line) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc() || ptr != last) {
        throw CsvError(line, "cannot parse value '" + std::string(text) + "'");
    }
    if (!std::isfinite(value)) {
        throw CsvError(line, "value must be finite, got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

GroupData parse_group_csv(std::istream& in) {
    std::string raw;
    std::size_t line = 0;
    if (!std::getline(in, raw)) {
        throw CsvError(1, "empty input; expected header 'group,value'");
    }
    ++line;
    std::string_view header = strip_cr(raw);
    if (header.starts_with("\xEF\xBB\xBF")) {
        header.remove_prefix(3);
    }
    if (header != "group,value") {
        throw CsvError(line, "expected header 'group,value', got '" + std::string(header) + "'");
    }

    GroupData data;
    while (std::getline(in, raw)) {
        ++line;
        const std::string_view row = strip_cr(raw);
        if (row.empty()) {
            continue;
        }
        const auto comma = row.find(',');
        if (comma == std::string_view::npos || row.find(',', comma + 1) != std::string_view::npos) {
            throw CsvError(line, "expected exactly two fields 'group,value'");
        }
        const std::string_view label = row.substr(0, comma);
        if (label.empty()) {
            throw CsvError(line, "empty group label");
        }
        const double value = parse_value(row.substr(comma + 1), line);

        if (data.label_i.empty() || label == data.label_i) {
            data.label_i = label;
            data.values_i.push_back(value);
        } else if (data.label_j.empty() || label == data.label_j) {
            data.label_j = label;
            data.values_j.push_back(value);
        } else {
            throw CsvError(line, "third group label '" + std::string(label) +
                                     "'; exactly two groups are required");
        }
    }
    if (data.label_j.empty()) {
        throw CsvError(0, "exactly two distinct group labels are required, found " +
                              std::to_string(data.label_i.empty() ? 0 : 1));
    }
    return data;
}

}  // namespace hedges::cli
