#pragma once

#include <cstddef>
#include <vector>

#include "hkens/config.hpp"
#include "hkens/hk.hpp"
#include "hkens/kmeans.hpp"
#include "hkens/orclus.hpp"
#include "hkens/report.hpp"
#include "hkens/split_merge.hpp"
#include "hkens/types.hpp"

namespace hkens {

struct MemberDiagnostics {
    std::size_t k_value = 0;
    double member_objective = 0.0;
    std::size_t leaves = 0;
    std::size_t oversize_leaves = 0;
    double split_objective = 0.0;
    std::size_t merged_clusters = 0;
    double merge_objective = 0.0;
    MergeStats merge;
};

struct PipelineResult {
    PipelineConfig config;
    std::size_t resolved_k0 = 0;
    double resolved_beta = 0.0;
    ProjectedClustering subspace;            // stage 2
    std::vector<EnsembleMember> members;     // stage 3
    std::vector<Partition> merged;           // stages 4-5, one per member
    std::vector<MemberDiagnostics> diagnostics;
    Partition final_partition;
    double final_objective = 0.0;
    RunReport report;   // deterministic; byte-stable across identical runs
    RunReport timings;  // wall clock, written separately
};

// Runs preprocessing, subspace clustering, ensemble generation, split, merge,
// and consensus selection. All randomness derives from config.seed.
PipelineResult run_pipeline(const Dataset& data, const PipelineConfig& config);

struct BaselineResult {
    KMeansResult result;
    RunReport report;
    RunReport timings;
};

// Plain k-means from random seeds, reported in the same format for
// side-by-side comparison.
BaselineResult run_kmeans_baseline(const Dataset& data, const PipelineConfig& config);

}  // namespace hkens
