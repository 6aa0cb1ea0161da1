#include "hkens/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hkens/errors.hpp"

namespace hkens {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_line(const std::string& line, char delim) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, delim)) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == delim) {
        cells.push_back("");
    }
    return cells;
}

bool is_missing(const std::string& cell) {
    return cell.empty() || cell == "?";
}

double parse_cell(const std::string& cell, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        throw DataError("row " + std::to_string(row + 1) + ", column " + std::to_string(col + 1) +
                        ": cell '" + cell + "' is not numeric");
    }
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RawTable load_csv(const std::filesystem::path& path, const std::optional<ColumnRef>& label_column,
                  bool has_header) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot read '" + path.string() + "'");
    }

    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!trim(line).empty()) {
            lines.push_back(line);
        }
    }
    if (lines.empty()) {
        throw DataError("'" + path.string() + "' has no rows");
    }

    const char delim = lines.front().find('\t') != std::string::npos ? '\t' : ',';

    RawTable table;
    table.name = path.stem().string();

    std::size_t total_cols = split_line(lines.front(), delim).size();
    std::size_t first_data = 0;
    std::optional<std::vector<std::string>> raw_header;
    if (has_header) {
        raw_header = split_line(lines.front(), delim);
        first_data = 1;
        if (lines.size() == 1) {
            throw DataError("'" + path.string() + "' has a header but no data rows");
        }
    }

    // resolve the label column, if any
    std::optional<std::size_t> label_idx;
    if (label_column) {
        if (std::holds_alternative<std::size_t>(*label_column)) {
            label_idx = std::get<std::size_t>(*label_column);
        } else {
            const std::string& wanted = std::get<std::string>(*label_column);
            if (!raw_header) {
                throw ConfigError("label column '" + wanted + "' given by name but '" +
                                  path.string() + "' was read without a header");
            }
            auto it = std::find(raw_header->begin(), raw_header->end(), wanted);
            if (it == raw_header->end()) {
                throw ConfigError("label column '" + wanted + "' not found in header");
            }
            label_idx = static_cast<std::size_t>(it - raw_header->begin());
        }
        if (*label_idx >= total_cols) {
            throw ConfigError("label column index " + std::to_string(*label_idx) +
                              " out of range; file has " + std::to_string(total_cols) +
                              " columns");
        }
    }

    table.n_cols = total_cols - (label_idx ? 1 : 0);
    if (table.n_cols == 0) {
        throw DataError("'" + path.string() + "' has no feature columns");
    }
    if (raw_header) {
        std::vector<std::string> feature_names;
        for (std::size_t c = 0; c < total_cols; ++c) {
            if (!label_idx || c != *label_idx) {
                feature_names.push_back((*raw_header)[c]);
            }
        }
        table.header = std::move(feature_names);
    }

    for (std::size_t r = first_data; r < lines.size(); ++r) {
        std::vector<std::string> cells = split_line(lines[r], delim);
        if (cells.size() != total_cols) {
            throw DataError("row " + std::to_string(r + 1) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(total_cols));
        }
        std::vector<std::optional<double>> row;
        row.reserve(table.n_cols);
        for (std::size_t c = 0; c < total_cols; ++c) {
            if (label_idx && c == *label_idx) {
                table.labels.push_back(cells[c]);
                continue;
            }
            if (is_missing(cells[c])) {
                row.push_back(std::nullopt);
            } else {
                row.push_back(parse_cell(cells[c], r, c));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Dataset impute_missing(const RawTable& raw) {
    Dataset data;
    data.name = raw.name;
    data.dim = raw.n_cols;
    data.labels = raw.labels;
    data.points.reserve(raw.rows.size());
    for (const auto& row : raw.rows) {
        Point p(raw.n_cols, 0.0);
        for (std::size_t c = 0; c < row.size(); ++c) {
            p[c] = row[c].value_or(0.0);
        }
        data.points.push_back(std::move(p));
    }
    data.validate();
    return data;
}

Dataset standardize(const Dataset& data) {
    data.validate();
    Dataset out = data;
    for (std::size_t c = 0; c < data.dim; ++c) {
        double mean = 0.0;
        for (const Point& p : data.points) {
            mean += p[c];
        }
        mean /= static_cast<double>(data.size());
        double var = 0.0;
        for (const Point& p : data.points) {
            const double d = p[c] - mean;
            var += d * d;
        }
        var /= static_cast<double>(data.size());
        const double sigma = std::sqrt(var);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out.points[i][c] -= mean;
            if (sigma > 0.0) {
                out.points[i][c] /= sigma;
            }
        }
    }
    return out;
}

void write_csv(const Dataset& data, const std::filesystem::path& path, bool with_labels) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    with_labels = with_labels && data.has_labels();
    for (std::size_t c = 0; c < data.dim; ++c) {
        out << 'f' << (c + 1);
        if (c + 1 < data.dim || with_labels) {
            out << ',';
        }
    }
    if (with_labels) {
        out << "label";
    }
    out << '\n';
    for (std::size_t i = 0; i < data.size(); ++i) {
        const Point& p = data.points[i];
        for (std::size_t c = 0; c < data.dim; ++c) {
            out << format_double(p[c]);
            if (c + 1 < data.dim || with_labels) {
                out << ',';
            }
        }
        if (with_labels) {
            out << data.labels[i];
        }
        out << '\n';
    }
}

}  // namespace hkens
