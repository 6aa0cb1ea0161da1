#include "hkens/pipeline.hpp"

#include <chrono>
#include <string>

#include "hkens/errors.hpp"
#include "hkens/eval.hpp"
#include "hkens/geometry.hpp"
#include "hkens/ingest.hpp"
#include "hkens/rng.hpp"

namespace hkens {

namespace {

// fixed stream ids so stage randomness is independent of stage order
constexpr std::uint64_t kOrclusStream = 1;
constexpr std::uint64_t kMembersStream = 2;
constexpr std::uint64_t kBaselineStream = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void add_data_echo(RunReport& report, const Dataset& data) {
    report.add("data.name", data.name);
    report.add("data.n", data.size());
    report.add("data.dim", data.dim);
    report.add("data.labels", data.has_labels() ? "yes" : "no");
}

void add_config_echo(RunReport& report, const PipelineConfig& cfg, std::size_t resolved_k0,
                     double resolved_beta) {
    report.add("config.k", cfg.k);
    report.add("config.d", cfg.d);
    report.add("config.threshold", cfg.threshold);
    report.add("config.ensemble_size", cfg.ensemble_size);
    report.add("config.seed", std::to_string(cfg.seed));
    report.add("config.k0", resolved_k0);
    report.add("config.alpha", cfg.alpha);
    report.add("config.beta", resolved_beta);
    report.add("config.consensus", to_string(cfg.consensus));
    report.add("config.split_select", to_string(cfg.split_select));
    report.add("config.max_iters", cfg.max_iters);
    report.add("config.tol", cfg.tol);
    report.add("config.standardize", cfg.standardize ? "true" : "false");
}

}  // namespace

PipelineResult run_pipeline(const Dataset& raw_data, const PipelineConfig& config) {
    raw_data.validate();
    config.validate_for(raw_data.size(), raw_data.dim);

    const auto total_start = Clock::now();
    PipelineResult out;
    out.config = config;

    const Dataset data = config.standardize ? standardize(raw_data) : raw_data;

    out.resolved_k0 = config.k0 == 0 ? orclus_default_k0(config.k, data.size()) : config.k0;
    out.resolved_beta = config.beta == 0.0
                            ? orclus_coupled_beta(out.resolved_k0, config.k, data.dim, config.d,
                                                  config.alpha)
                            : config.beta;

    Rng rng(config.seed);

    // stage 2: subspace clustering
    auto stage_start = Clock::now();
    OrclusOptions orclus_opts;
    orclus_opts.k0 = out.resolved_k0;
    orclus_opts.alpha = config.alpha;
    orclus_opts.beta = out.resolved_beta;
    orclus_opts.max_polish_iters = config.max_iters;
    Rng orclus_rng = rng.stream(kOrclusStream);
    out.subspace = orclus(data, config.k, config.d, orclus_opts, orclus_rng);
    const double orclus_ms = ms_since(stage_start);

    // stage 3: divisive ensemble members
    stage_start = Clock::now();
    DivisiveOptions div_opts;
    div_opts.select = config.split_select;
    div_opts.max_iters = config.max_iters;
    div_opts.tol = config.tol;
    Rng members_rng = rng.stream(kMembersStream);
    out.members = generate_members(out.subspace, data, config.k, config.ensemble_size,
                                   members_rng, div_opts);
    const double members_ms = ms_since(stage_start);

    // stages 4-5: threshold split, MSE-guided merge
    stage_start = Clock::now();
    KMeansOptions split_opts{config.max_iters, config.tol};
    for (const EnsembleMember& member : out.members) {
        MemberDiagnostics diag;
        diag.k_value = member.k_value;
        diag.member_objective = member.objective;

        const ClusterTree tree = split_pass(member, data, config.threshold, split_opts);
        const Partition leaves = tree.leaf_partition();
        diag.leaves = leaves.k();
        diag.oversize_leaves = tree.oversize_leaves();
        diag.split_objective = partition_objective(leaves, data);

        Partition merged = merge_pass(tree, data, &diag.merge);
        diag.merged_clusters = merged.k();
        diag.merge_objective = partition_objective(merged, data);

        out.merged.push_back(std::move(merged));
        out.diagnostics.push_back(diag);
    }
    const double split_merge_ms = ms_since(stage_start);

    // consensus
    stage_start = Clock::now();
    out.final_partition = consensus_select(out.merged, data, config.consensus);
    out.final_objective = partition_objective(out.final_partition, data);
    const double consensus_ms = ms_since(stage_start);

    RunReport& report = out.report;
    report.add("command", "run");
    add_data_echo(report, raw_data);
    add_config_echo(report, config, out.resolved_k0, out.resolved_beta);
    report.add("orclus.clusters", out.subspace.partition.k());
    report.add("orclus.dim", out.subspace.current_dim);
    report.add("orclus.objective", partition_objective(out.subspace.partition, data));
    for (std::size_t i = 0; i < out.diagnostics.size(); ++i) {
        const MemberDiagnostics& d = out.diagnostics[i];
        const std::string prefix = "member." + std::to_string(i + 1);
        report.add(prefix + ".k_value", d.k_value);
        report.add(prefix + ".objective", d.member_objective);
        report.add(prefix + ".split.leaves", d.leaves);
        report.add(prefix + ".split.oversize", d.oversize_leaves);
        report.add(prefix + ".split.objective", d.split_objective);
        report.add(prefix + ".merge.clusters", d.merged_clusters);
        report.add(prefix + ".merge.objective", d.merge_objective);
        report.add(prefix + ".merge.accepted", d.merge.accepted);
        report.add(prefix + ".merge.rejected", d.merge.rejected);
    }
    report.add("final.clusters", out.final_partition.k());
    report.add("final.objective", out.final_objective);
    if (data.has_labels()) {
        report.add("final.purity", purity(out.final_partition, data.labels));
        report.add("final.rand_index", rand_index(out.final_partition, data.labels));
    }

    out.timings.add("timing.orclus_ms", orclus_ms);
    out.timings.add("timing.members_ms", members_ms);
    out.timings.add("timing.split_merge_ms", split_merge_ms);
    out.timings.add("timing.consensus_ms", consensus_ms);
    out.timings.add("timing.total_ms", ms_since(total_start));
    return out;
}

BaselineResult run_kmeans_baseline(const Dataset& raw_data, const PipelineConfig& config) {
    raw_data.validate();
    config.validate_for(raw_data.size(), raw_data.dim);

    const auto start = Clock::now();
    const Dataset data = config.standardize ? standardize(raw_data) : raw_data;

    Rng rng(config.seed);
    Rng baseline_rng = rng.stream(kBaselineStream);
    const std::vector<Point> seeds = seed_random(data, config.k, baseline_rng);

    BaselineResult out;
    out.result = kmeans(data, seeds, KMeansOptions{config.max_iters, config.tol});

    RunReport& report = out.report;
    report.add("command", "kmeans-baseline");
    add_data_echo(report, raw_data);
    report.add("config.k", config.k);
    report.add("config.seed", std::to_string(config.seed));
    report.add("config.max_iters", config.max_iters);
    report.add("config.tol", config.tol);
    report.add("config.standardize", config.standardize ? "true" : "false");
    report.add("baseline.iterations", out.result.iterations);
    report.add("baseline.converged", out.result.converged ? "true" : "false");
    report.add("final.clusters", out.result.partition.k());
    report.add("final.objective", out.result.final_objective);
    if (data.has_labels()) {
        report.add("final.purity", purity(out.result.partition, data.labels));
        report.add("final.rand_index", rand_index(out.result.partition, data.labels));
    }
    out.timings.add("timing.total_ms", ms_since(start));
    return out;
}

}  // namespace hkens
