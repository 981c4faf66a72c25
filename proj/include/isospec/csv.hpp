#pragma once

// Deterministic delimited tables: `#` comment header, one header row, shortest
// round-trip number formatting, "nan" for missing values.

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/error.hpp"
#include "isospec/numerics.hpp"
#include "isospec/version.hpp"

namespace isospec::csv {

inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct Column {
    std::string name;
    std::vector<double> values;
};

struct Table {
    std::vector<std::string> comments;  // written after the version line, each prefixed by "# "
    std::vector<Column> columns;

    std::size_t rows() const { return columns.empty() ? 0 : columns.front().values.size(); }

    void add(std::string name, std::vector<double> values) {
        detail::require(columns.empty() || values.size() == rows(), "column length mismatch: " + name);
        columns.push_back({std::move(name), std::move(values)});
    }

    const Column& column(const std::string& name) const {
        for (const auto& c : columns) {
            if (c.name == name) return c;
        }
        throw DomainError("no column named " + name);
    }
};

/// x column from a grid plus one column per curve; nodes outside a curve's
/// (window) grid are written as nan.
inline Table curves_on(const Grid& g, const std::vector<std::pair<std::string, SampledFunction>>& curves,
                       const std::string& xname = "x") {
    Table t;
    t.add(xname, std::vector<double>(g.nodes().begin(), g.nodes().end()));
    for (const auto& [name, f] : curves) {
        std::vector<double> v(g.size(), std::numeric_limits<double>::quiet_NaN());
        const std::size_t off = f.grid().offset_in(g);
        for (std::size_t i = 0; i < f.size() && off + i < g.size(); ++i) v[off + i] = f[i];
        t.add(name, std::move(v));
    }
    return t;
}

/// Keep rows whose first column lies in [lo, hi].
inline Table clip_rows(const Table& t, double lo, double hi) {
    Table out;
    out.comments = t.comments;
    const auto& x = t.columns.front().values;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= lo && x[i] <= hi) keep.push_back(i);
    }
    for (const auto& c : t.columns) {
        std::vector<double> v;
        v.reserve(keep.size());
        for (auto i : keep) v.push_back(c.values[i]);
        out.add(c.name, std::move(v));
    }
    return out;
}

inline void write(std::ostream& os, const Table& t, char sep = ',') {
    os << "# isospec " << version << '\n';
    for (const auto& c : t.comments) os << "# " << c << '\n';
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? std::string(1, sep) : "") << t.columns[j].name;
    os << '\n';
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.columns.size(); ++j) {
            if (j) os << sep;
            os << format_number(t.columns[j].values[i]);
        }
        os << '\n';
    }
}

inline void write_file(const std::string& path, const Table& t, char sep = ',') {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write(f, t, sep);
    if (!f) throw std::runtime_error("write failed: " + path);
}

/// Parse a table written by `write` (comments kept without the "# " prefix).
inline Table read(std::istream& is, char sep = ',') {
    Table t;
    std::string line;
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    auto split = [sep](const std::string& s) {
        std::vector<std::string> out;
        std::string cell;
        std::istringstream ss(s);
        while (std::getline(ss, cell, sep)) out.push_back(cell);
        return out;
    };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.comments.push_back(line.size() > 2 ? line.substr(2) : "");
            continue;
        }
        auto cells = split(line);
        if (names.empty()) {
            names = cells;
            cols.resize(names.size());
            continue;
        }
        detail::require(cells.size() == names.size(), "ragged row in table");
        for (std::size_t j = 0; j < cells.size(); ++j) {
            cols[j].push_back(cells[j] == "nan" ? std::numeric_limits<double>::quiet_NaN() : std::stod(cells[j]));
        }
    }
    for (std::size_t j = 0; j < names.size(); ++j) t.columns.push_back({names[j], std::move(cols[j])});
    return t;
}

inline Table read_file(const std::string& path, char sep = ',') {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read(f, sep);
}

}  // namespace isospec::csv
