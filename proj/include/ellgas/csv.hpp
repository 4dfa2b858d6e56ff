#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ellgas {

/// `#` metadata lines, one header row, then data rows. Cells are kept as text
/// so parse followed by write reproduces the input byte for byte.
struct CsvDocument {
    std::vector<std::string> metadata;  // text after the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_meta(std::string_view key, std::string_view value);
    void add_row(std::vector<std::string> row);
    [[nodiscard]] std::size_t column(std::string_view name) const;
    [[nodiscard]] double number(std::size_t row, std::string_view name) const;
};

/// 17 significant digits, shortest exponent form.
[[nodiscard]] std::string format_real(double x);

[[nodiscard]] std::string write_csv(const CsvDocument& doc);

/// Throws DomainError on a missing header or a row with the wrong width.
[[nodiscard]] CsvDocument parse_csv(std::string_view text);

/// Writes to a sibling temp file and renames it over `path`; "-" writes to stdout.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ellgas
