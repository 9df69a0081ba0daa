#include "render.hpp"

#include "frobscan/error.hpp"

#include <algorithm>
#include <ostream>

namespace frobscan::cli {

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "table") return Format::Table;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + text + "'");
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

namespace {

void write_csv(std::ostream& out, const Rendered& r) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << csv_field(cells[k]);
        out << '\n';
    };
    if (r.header.empty()) {
        line({"key", "value"});
        for (const auto& [k, v] : r.summary) line({k, v});
        return;
    }
    line(r.header);
    for (const auto& row : r.rows) line(row);
}

void write_table(std::ostream& out, const Rendered& r) {
    std::size_t key_width = 0;
    for (const auto& [k, v] : r.summary) key_width = std::max(key_width, k.size());
    for (const auto& [k, v] : r.summary) out << k << std::string(key_width - k.size(), ' ') << "  " << v << '\n';
    if (r.header.empty()) return;

    std::vector<std::size_t> widths(r.header.size(), 0);
    for (std::size_t c = 0; c < r.header.size(); ++c) widths[c] = r.header[c].size();
    for (const auto& row : r.rows)
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

    auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) text += "  ";
            text += cells[c];
            if (c + 1 < cells.size()) text += std::string(widths[c] - cells[c].size(), ' ');
        }
        out << text << '\n';
    };
    if (!r.summary.empty()) out << '\n';
    line(r.header);
    std::vector<std::string> rule;
    for (std::size_t w : widths) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : r.rows) line(row);
}

}  // namespace

void write(std::ostream& out, const Rendered& r, Format format) {
    switch (format) {
        case Format::Json: out << r.json.dump(2) << '\n'; break;
        case Format::Csv: write_csv(out, r); break;
        case Format::Table: write_table(out, r); break;
    }
}

}  // namespace frobscan::cli
