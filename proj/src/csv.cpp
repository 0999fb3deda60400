// csv.cpp — Minimal CSV table with 17-significant-digit floats

#include "ftls/csv.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "ftls/errors.hpp"

namespace ftls {

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return fmt::format("{:.17g}", x);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<CsvCell> row) {
    if (row.size() != header_.size()) {
        throw InvalidArgument(fmt::format("csv: row has {} cells, header has {}", row.size(), header_.size()));
    }
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& c : row) {
        cells.push_back(std::visit(
            [](const auto& v) -> std::string {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    return format_double(v);
                } else if constexpr (std::is_same_v<T, long long>) {
                    return std::to_string(v);
                } else {
                    return v;
                }
            },
            c));
    }
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += i ? "," : "";
            out += cells[i];
        }
        out += '\n';
    };
    line(header_);
    for (const auto& r : rows_) {
        line(r);
    }
    return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument(fmt::format("cannot write '{}'", path.string()));
    }
    f << str();
}

} // namespace ftls
