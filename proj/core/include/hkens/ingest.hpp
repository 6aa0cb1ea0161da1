#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hkens/types.hpp"

namespace hkens {

// Parsed delimited text. Feature cells only; nullopt marks a missing value
// (empty cell or the "?" sentinel). The label column, when selected, is held
// separately and never reaches the clustering stages.
struct RawTable {
    std::vector<std::vector<std::optional<double>>> rows;
    std::optional<std::vector<std::string>> header;
    std::size_t n_cols = 0;
    std::vector<std::string> labels;
    std::string name;
};

// Column selector: 0-based index, or name (requires a header row).
using ColumnRef = std::variant<std::size_t, std::string>;

// Delimiter (comma or tab) is autodetected from the first line.
RawTable load_csv(const std::filesystem::path& path,
                  const std::optional<ColumnRef>& label_column = std::nullopt,
                  bool has_header = false);

// Missing cells become 0.0; the result satisfies all Dataset invariants.
Dataset impute_missing(const RawTable& raw);

// Per-column z-score (population sigma); constant columns are centered only.
Dataset standardize(const Dataset& data);

// Round-trips doubles exactly (shortest form via %.17g).
void write_csv(const Dataset& data, const std::filesystem::path& path, bool with_labels);

std::string format_double(double v);

}  // namespace hkens
