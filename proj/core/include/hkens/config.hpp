#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace hkens {

enum class ConsensusMode { MinSse, CoAssociation };
enum class SplitSelect { LargestSse, LargestSize };

ConsensusMode parse_consensus(const std::string& text);
SplitSelect parse_split_select(const std::string& text);
std::string to_string(ConsensusMode mode);
std::string to_string(SplitSelect mode);

struct PipelineConfig {
    std::size_t k = 2;           // target cluster count
    std::size_t d = 2;           // subspace dimensionality
    std::size_t threshold = 2;   // max cluster size tolerated by the split stage
    std::size_t ensemble_size = 5;
    std::uint64_t seed = 0;
    std::size_t k0 = 0;          // initial seed count; 0 = auto
    double alpha = 0.5;          // cluster-count decay in (0,1)
    double beta = 0.0;           // dimension decay in (0,1); 0 = coupled to alpha
    ConsensusMode consensus = ConsensusMode::MinSse;
    SplitSelect split_select = SplitSelect::LargestSse;
    std::size_t max_iters = 100;
    double tol = 1e-6;
    bool standardize = false;

    // Parameter-only checks; throws ConfigError.
    void validate() const;
    // Checks that need the data's N and D.
    void validate_for(std::size_t n, std::size_t dim) const;
};

// Flat "key = value" text; '#' starts a comment; unknown keys are errors.
PipelineConfig load_config_file(const std::filesystem::path& path);

}  // namespace hkens
