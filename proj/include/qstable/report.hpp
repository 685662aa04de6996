#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qstable/version.hpp"

namespace qstab {

// Tabular result of a grid run. Column order is fixed as
//
//     params..., value..., expected, pass, witness_ref
//
// where the trailing three are always present; a failing row must carry a
// witness (counterexample face, Betti table, or infeasibility note) so every
// verdict can be re-derived from its own row.
struct Report {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> cells;
    std::vector<bool> row_pass;

    void add_row(std::vector<std::string> row, bool pass) {
        cells.push_back(std::move(row));
        row_pass.push_back(pass);
    }

    bool all_pass() const {
        for (bool p : row_pass) {
            if (!p) return false;
        }
        return true;
    }

    std::size_t fail_count() const {
        std::size_t n = 0;
        for (bool p : row_pass) {
            if (!p) ++n;
        }
        return n;
    }
};

namespace detail {

inline std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string report_to_csv(const Report& report) {
    std::string out;
    for (std::size_t j = 0; j < report.columns.size(); ++j) {
        if (j > 0) out += ',';
        out += detail::csv_escape(report.columns[j]);
    }
    out += '\n';
    for (const auto& row : report.cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += ',';
            out += detail::csv_escape(row[j]);
        }
        out += '\n';
    }
    return out;
}

inline nlohmann::json report_to_json(const Report& report) {
    nlohmann::json out;
    out["version"] = kFormatVersion;
    out["type"] = "report";
    out["columns"] = report.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < report.cells.size(); ++i) {
        nlohmann::json row;
        for (std::size_t j = 0; j < report.columns.size() && j < report.cells[i].size(); ++j) {
            row[report.columns[j]] = report.cells[i][j];
        }
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    out["all_pass"] = report.all_pass();
    return out;
}

}  // namespace qstab
