// test_util.hpp — Shared helpers for the unit tests

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ftls/algebra.hpp"

namespace testutil {

inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("ftls_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t col(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        throw std::runtime_error("no column " + name);
    }
    double num(std::size_t row, const std::string& name) const { return std::stod(rows[row][col(name)]); }
};

inline Csv read_csv(const std::filesystem::path& p) {
    Csv c;
    std::istringstream in(slurp(p));
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (first) {
            c.header = cells;
            first = false;
        } else {
            c.rows.push_back(cells);
        }
    }
    return c;
}

inline ftls::Operator2 mat(ftls::cplx a, ftls::cplx b, ftls::cplx c, ftls::cplx d,
                           ftls::Basis basis = ftls::Basis::Lab) {
    ftls::Mat2 m;
    m << a, b, c, d;
    return ftls::Operator2(m, basis);
}

} // namespace testutil
