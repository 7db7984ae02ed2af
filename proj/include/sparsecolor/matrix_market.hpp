#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sparsecolor/pattern.hpp"

namespace sparsecolor {

namespace detail {

inline std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace detail

// Reads the sparsity pattern of a Matrix Market coordinate file. Numerical
// values are ignored; symmetric storage is expanded to both triangles.
inline SparsityPattern read_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("matrix market: empty input");
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (detail::to_lower(banner) != "%%matrixmarket")
        throw std::invalid_argument("matrix market: missing %%MatrixMarket banner");
    if (detail::to_lower(object) != "matrix")
        throw std::invalid_argument("matrix market: unsupported object '" + object + "'");
    if (detail::to_lower(format) != "coordinate")
        throw std::invalid_argument("matrix market: unsupported format '" + format + "'");
    field = detail::to_lower(field);
    if (field != "pattern" && field != "real" && field != "integer" &&
        field != "complex")
        throw std::invalid_argument("matrix market: unsupported field '" + field + "'");
    symmetry = detail::to_lower(symmetry);
    if (symmetry != "general" && symmetry != "symmetric")
        throw std::invalid_argument("matrix market: unsupported symmetry '" +
                                    symmetry + "'");

    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            std::size_t start = out.find_first_not_of(" \t\r\n");
            if (start == std::string::npos) continue;
            if (out[start] == '%') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line(line))
        throw std::invalid_argument("matrix market: missing size line");
    long long m = 0, n = 0, nnz = 0;
    {
        std::istringstream sizes(line);
        if (!(sizes >> m >> n >> nnz))
            throw std::invalid_argument("matrix market: malformed size line");
    }
    if (m < 0 || n < 0 || nnz < 0)
        throw std::invalid_argument("matrix market: negative size");

    std::vector<std::pair<int, int>> entries;
    entries.reserve(static_cast<std::size_t>(symmetry == "symmetric" ? 2 * nnz : nnz));
    for (long long k = 0; k < nnz; ++k) {
        if (!next_content_line(line))
            throw std::invalid_argument("matrix market: unexpected end of entries");
        std::istringstream entry(line);
        int i = 0, j = 0;
        if (!(entry >> i >> j))
            throw std::invalid_argument("matrix market: malformed entry line '" +
                                        line + "'");
        entries.emplace_back(i, j);
        if (symmetry == "symmetric" && i != j) entries.emplace_back(j, i);
    }
    return from_coordinates(static_cast<int>(m), static_cast<int>(n),
                            std::move(entries));
}

inline SparsityPattern read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return read_matrix_market(in);
}

}  // namespace sparsecolor
