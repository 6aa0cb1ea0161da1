#include "hkens/partition_io.hpp"

#include <charconv>
#include <fstream>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/geometry.hpp"

namespace hkens {

void write_partition(const Partition& partition, const std::filesystem::path& path) {
    partition.validate();
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    out << "k=" << partition.k() << ",n=" << partition.n_points << '\n';
    const std::vector<std::size_t> assignment = partition.assignments();
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        out << i << ',' << assignment[i] << '\n';
    }
}

namespace {

std::size_t parse_count(const std::string& text, const std::string& what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw DataError("partition file: bad " + what + " '" + text + "'");
    }
    return value;
}

}  // namespace

Partition read_partition(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot read '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw DataError("partition file '" + path.string() + "' is empty");
    }
    std::size_t k = 0;
    std::size_t n = 0;
    {
        const std::size_t comma = line.find(',');
        if (line.rfind("k=", 0) != 0 || comma == std::string::npos ||
            line.compare(comma + 1, 2, "n=") != 0) {
            throw DataError("partition file: bad header '" + line + "'");
        }
        k = parse_count(line.substr(2, comma - 2), "k");
        n = parse_count(line.substr(comma + 3), "n");
    }

    Partition part;
    part.n_points = n;
    part.clusters.resize(k);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            throw DataError("partition file: bad row '" + line + "'");
        }
        const std::size_t point = parse_count(line.substr(0, comma), "point index");
        const std::size_t cluster = parse_count(line.substr(comma + 1), "cluster id");
        if (cluster >= k) {
            throw DataError("partition file: cluster id " + std::to_string(cluster) +
                            " out of range");
        }
        if (point >= n) {
            throw DataError("partition file: point index " + std::to_string(point) +
                            " out of range");
        }
        part.clusters[cluster].members.push_back(point);
        ++rows;
    }
    if (rows != n) {
        throw DataError("partition file lists " + std::to_string(rows) + " of " +
                        std::to_string(n) + " points");
    }
    part.validate();
    return part;
}

Partition read_partition(const std::filesystem::path& path, const Dataset& data) {
    Partition part = read_partition(path);
    if (part.n_points != data.size()) {
        throw DataError("partition covers " + std::to_string(part.n_points) +
                        " points but the dataset has " + std::to_string(data.size()));
    }
    for (Cluster& cl : part.clusters) {
        finalize_centroid(cl, data);
    }
    return part;
}

}  // namespace hkens
