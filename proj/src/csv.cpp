#include "ellgas/csv.hpp"

#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "ellgas/errors.hpp"

namespace ellgas {

namespace {

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.emplace_back(line.substr(start));
            return cells;
        }
        cells.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

void append_joined(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += cells[i];
    }
    out += '\n';
}

}  // namespace

void CsvDocument::add_meta(std::string_view key, std::string_view value) {
    metadata.push_back(fmt::format(" {}: {}", key, value));
}

void CsvDocument::add_row(std::vector<std::string> row) {
    if (row.size() != header.size()) throw DomainError("CsvDocument: row width does not match header");
    rows.push_back(std::move(row));
}

std::size_t CsvDocument::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw DomainError(fmt::format("CsvDocument: no column '{}'", name));
}

double CsvDocument::number(std::size_t row, std::string_view name) const {
    return std::stod(rows.at(row).at(column(name)));
}

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

std::string write_csv(const CsvDocument& doc) {
    std::string out;
    for (const auto& line : doc.metadata) {
        out += '#';
        out += line;
        out += '\n';
    }
    append_joined(out, doc.header);
    for (const auto& row : doc.rows) append_joined(out, row);
    return out;
}

CsvDocument parse_csv(std::string_view text) {
    CsvDocument doc;
    bool have_header = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!have_header && !line.empty() && line.front() == '#') {
            doc.metadata.emplace_back(line.substr(1));
        } else if (!have_header) {
            doc.header = split(line);
            have_header = true;
        } else {
            auto cells = split(line);
            if (cells.size() != doc.header.size()) throw DomainError("parse_csv: row width does not match header");
            doc.rows.push_back(std::move(cells));
        }
    }
    if (!have_header) throw DomainError("parse_csv: missing header row");
    return doc;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    if (path == "-") {
        std::cout << content << std::flush;
        return;
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ellgas
