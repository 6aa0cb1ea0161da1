#include "hkens/config.hpp"

#include <charconv>
#include <fstream>
#include <limits>

#include "hkens/errors.hpp"

namespace hkens {

ConsensusMode parse_consensus(const std::string& text) {
    if (text == "min-sse") {
        return ConsensusMode::MinSse;
    }
    if (text == "co-association") {
        return ConsensusMode::CoAssociation;
    }
    throw ConfigError("unknown consensus mode '" + text + "' (expected min-sse or co-association)");
}

SplitSelect parse_split_select(const std::string& text) {
    if (text == "largest-sse") {
        return SplitSelect::LargestSse;
    }
    if (text == "largest-size") {
        return SplitSelect::LargestSize;
    }
    throw ConfigError("unknown split selector '" + text + "' (expected largest-sse or largest-size)");
}

std::string to_string(ConsensusMode mode) {
    return mode == ConsensusMode::MinSse ? "min-sse" : "co-association";
}

std::string to_string(SplitSelect mode) {
    return mode == SplitSelect::LargestSse ? "largest-sse" : "largest-size";
}

void PipelineConfig::validate() const {
    if (k < 2) {
        throw ConfigError("k must be at least 2");
    }
    if (d < 1) {
        throw ConfigError("d must be at least 1");
    }
    if (threshold < 2) {
        throw ConfigError("threshold must be at least 2");
    }
    if (ensemble_size < 1) {
        throw ConfigError("ensemble_size must be at least 1");
    }
    if (ensemble_size > k + 10 - 2 + 1) {
        throw ConfigError("ensemble_size exceeds the " + std::to_string(k + 9) +
                          " cluster counts available in [2, k+10]");
    }
    if (k0 != 0 && k0 < k) {
        throw ConfigError("k0 must be at least k");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie in (0, 1)");
    }
    if (beta != 0.0 && !(beta > 0.0 && beta < 1.0)) {
        throw ConfigError("beta must lie in (0, 1)");
    }
    if (max_iters < 1) {
        throw ConfigError("max_iters must be at least 1");
    }
    if (tol < 0.0) {
        throw ConfigError("tol must be nonnegative");
    }
}

void PipelineConfig::validate_for(std::size_t n, std::size_t dim) const {
    validate();
    if (k > n) {
        throw ConfigError("k = " + std::to_string(k) + " exceeds the " + std::to_string(n) +
                          " data points");
    }
    if (d > dim) {
        throw ConfigError("d = " + std::to_string(d) + " exceeds the data dimensionality " +
                          std::to_string(dim));
    }
    if (k0 > n) {
        throw ConfigError("k0 = " + std::to_string(k0) + " exceeds the " + std::to_string(n) +
                          " data points");
    }
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t parse_size(const std::string& key, const std::string& value) {
    std::size_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("config key '" + key + "': '" + value + "' is not a count");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("config key '" + key + "': '" + value + "' is not an unsigned integer");
    }
    return out;
}

double parse_real(const std::string& key, const std::string& value) {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("config key '" + key + "': '" + value + "' is not a real number");
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no") {
        return false;
    }
    throw ConfigError("config key '" + key + "': '" + value + "' is not a boolean");
}

}  // namespace

PipelineConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path.string() + "'");
    }
    PipelineConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "k") {
            cfg.k = parse_size(key, value);
        } else if (key == "d") {
            cfg.d = parse_size(key, value);
        } else if (key == "threshold") {
            cfg.threshold = parse_size(key, value);
        } else if (key == "ensemble_size") {
            cfg.ensemble_size = parse_size(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_u64(key, value);
        } else if (key == "k0") {
            cfg.k0 = parse_size(key, value);
        } else if (key == "alpha") {
            cfg.alpha = parse_real(key, value);
        } else if (key == "beta") {
            cfg.beta = parse_real(key, value);
        } else if (key == "consensus") {
            cfg.consensus = parse_consensus(value);
        } else if (key == "split_select") {
            cfg.split_select = parse_split_select(value);
        } else if (key == "max_iters") {
            cfg.max_iters = parse_size(key, value);
        } else if (key == "tol") {
            cfg.tol = parse_real(key, value);
        } else if (key == "standardize") {
            cfg.standardize = parse_bool(key, value);
        } else {
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key +
                              "'");
        }
    }
    return cfg;
}

}  // namespace hkens
