// io.hpp - JSON documents for rational dual matrices
//
//   {"rows": m, "cols": n, "real": [[...], ...], "dual": [[...], ...]}
//
// Entries are strings "p/q" / "p" or JSON integers on input and always
// canonical strings on output. "dual" is optional on input (zero when absent)
// and always written on output. Keys are emitted in the order above.

#ifndef DUALRANK_IO_HPP
#define DUALRANK_IO_HPP

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "dualrank/dual_matrix.hpp"
#include "dualrank/errors.hpp"
#include "dualrank/matrix.hpp"
#include "dualrank/rational.hpp"

namespace dualrank {

using ordered_json = nlohmann::ordered_json;

class schema_error : public parse_error {
public:
    using parse_error::parse_error;
};

namespace detail {

inline Rational entry_from_json(const ordered_json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const parse_error& e) {
            throw parse_error(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) {
        return Rational(mpz_class(v.dump(), 10), mpz_class(1));
    }
    throw schema_error(where + ": entry must be a string \"p/q\" or an integer");
}

inline RealMatrix grid_from_json(const ordered_json& grid, std::size_t rows, std::size_t cols, const char* key) {
    if (!grid.is_array() || grid.size() != rows) {
        throw schema_error(std::string("\"") + key + "\" must be an array of " + std::to_string(rows) + " rows");
    }
    RealMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = grid[i];
        if (!row.is_array() || row.size() != cols) {
            throw schema_error(std::string("\"") + key + "\" row " + std::to_string(i) + " must have " +
                               std::to_string(cols) + " entries");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = entry_from_json(row[j], std::string(key) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }
    return m;
}

inline std::size_t dimension_from_json(const ordered_json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0) {
        throw schema_error(std::string("\"") + key + "\" must be a positive integer");
    }
    return doc[key].get<std::size_t>();
}

inline std::string locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace detail

inline ordered_json parse_json_text(std::string_view text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is one past the offending character
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw parse_error("malformed JSON at " + detail::locate(text, at));
    }
}

inline RealDualMatrix dual_matrix_from_json(const ordered_json& doc) {
    if (!doc.is_object()) {
        throw schema_error("matrix document must be a JSON object");
    }
    const auto rows = detail::dimension_from_json(doc, "rows");
    const auto cols = detail::dimension_from_json(doc, "cols");
    if (!doc.contains("real")) {
        throw schema_error("missing \"real\"");
    }
    auto real = detail::grid_from_json(doc["real"], rows, cols, "real");
    if (!doc.contains("dual") || doc["dual"].is_null()) {
        return RealDualMatrix(std::move(real));
    }
    auto dual = detail::grid_from_json(doc["dual"], rows, cols, "dual");
    return {std::move(real), std::move(dual)};
}

inline RealDualMatrix parse_dual_matrix(std::string_view text) { return dual_matrix_from_json(parse_json_text(text)); }

inline ordered_json to_json(const RealMatrix& m) {
    ordered_json grid = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        grid.push_back(std::move(row));
    }
    return grid;
}

inline ordered_json to_json(const RealDualMatrix& m) {
    ordered_json doc;
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["real"] = to_json(m.real());
    doc["dual"] = to_json(m.dual());
    return doc;
}

inline std::string format_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

inline std::string format_dual_matrix(const RealDualMatrix& m) { return format_json(to_json(m)); }

}  // namespace dualrank

#endif  // DUALRANK_IO_HPP
