// csv.hpp — Minimal CSV table with 17-significant-digit floats

#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace ftls {

using CsvCell = std::variant<double, long long, std::string>;

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    // Throws InvalidArgument if the row width differs from the header.
    void add_row(std::vector<CsvCell> row);

    const std::vector<std::string>& header() const { return header_; }
    std::size_t rows() const { return rows_.size(); }
    std::string str() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// "{:.17g}"; non-finite values print as nan / inf / -inf.
std::string format_double(double x);

} // namespace ftls
