#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace frobscan::cli {

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& text);

/// One command's output in all three shapes. JSON carries everything; the
/// summary and the row table feed the text formats.
struct Rendered {
    nlohmann::ordered_json json;
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write(std::ostream& out, const Rendered& r, Format format);

std::string csv_field(const std::string& text);

}  // namespace frobscan::cli
