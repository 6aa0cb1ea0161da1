#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "hkens/config.hpp"
#include "hkens/errors.hpp"
#include "hkens/eval.hpp"
#include "hkens/geometry.hpp"
#include "hkens/ingest.hpp"
#include "hkens/partition_io.hpp"
#include "hkens/pipeline.hpp"
#include "hkens/report.hpp"
#include "hkens/rng.hpp"
#include "hkens/synth.hpp"

namespace fs = std::filesystem;

namespace {

struct InputArgs {
    std::string input;
    std::string label_col;  // index or name; empty = no label column
    bool no_header = false;
};

struct ConfigArgs {
    std::string config_path;
    std::optional<std::size_t> k;
    std::optional<std::size_t> d;
    std::optional<std::size_t> threshold;
    std::optional<std::size_t> ensemble_size;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> k0;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<std::string> consensus;
    std::optional<std::string> split_select;
    std::optional<std::size_t> max_iters;
    std::optional<double> tol;
    bool standardize = false;
};

void add_input_options(CLI::App* cmd, InputArgs& args) {
    cmd->add_option("--input", args.input, "Input delimited text file")->required();
    cmd->add_option("--label-col", args.label_col,
                    "Label column, as a 0-based index or a header name");
    cmd->add_flag("--no-header", args.no_header, "Treat the first line as data");
}

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
    cmd->add_option("--config", args.config_path, "Config file (key = value lines)");
    cmd->add_option("--k", args.k, "Target cluster count");
    cmd->add_option("--d", args.d, "Subspace dimensionality");
    cmd->add_option("--threshold", args.threshold, "Split stage size threshold");
    cmd->add_option("--ensemble-size", args.ensemble_size, "Number of ensemble members");
    cmd->add_option("--seed", args.seed, "RNG seed");
    cmd->add_option("--k0", args.k0, "Initial seed-cluster count (0 = auto)");
    cmd->add_option("--alpha", args.alpha, "Cluster-count decay factor");
    cmd->add_option("--beta", args.beta, "Dimension decay factor (0 = auto)");
    cmd->add_option("--consensus", args.consensus, "min-sse | co-association");
    cmd->add_option("--split-select", args.split_select, "largest-sse | largest-size");
    cmd->add_option("--max-iters", args.max_iters, "Iteration cap for inner loops");
    cmd->add_option("--tol", args.tol, "Relative objective tolerance");
    cmd->add_flag("--standardize", args.standardize, "Z-score features before clustering");
}

hkens::PipelineConfig resolve_config(const ConfigArgs& args) {
    hkens::PipelineConfig cfg;
    if (!args.config_path.empty()) {
        cfg = hkens::load_config_file(args.config_path);
    }
    if (args.k) cfg.k = *args.k;
    if (args.d) cfg.d = *args.d;
    if (args.threshold) cfg.threshold = *args.threshold;
    if (args.ensemble_size) cfg.ensemble_size = *args.ensemble_size;
    if (args.seed) cfg.seed = *args.seed;
    if (args.k0) cfg.k0 = *args.k0;
    if (args.alpha) cfg.alpha = *args.alpha;
    if (args.beta) cfg.beta = *args.beta;
    if (args.consensus) cfg.consensus = hkens::parse_consensus(*args.consensus);
    if (args.split_select) cfg.split_select = hkens::parse_split_select(*args.split_select);
    if (args.max_iters) cfg.max_iters = *args.max_iters;
    if (args.tol) cfg.tol = *args.tol;
    if (args.standardize) cfg.standardize = true;
    return cfg;
}

hkens::Dataset load_dataset(const InputArgs& args) {
    std::optional<hkens::ColumnRef> label_col;
    if (!args.label_col.empty()) {
        std::size_t index = 0;
        const char* first = args.label_col.data();
        const char* last = first + args.label_col.size();
        auto [ptr, ec] = std::from_chars(first, last, index);
        if (ec == std::errc{} && ptr == last) {
            label_col = hkens::ColumnRef{index};
        } else {
            label_col = hkens::ColumnRef{args.label_col};
        }
    }
    const hkens::RawTable table =
        hkens::load_csv(args.input, label_col, !args.no_header);
    return hkens::impute_missing(table);
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir = out.empty() ? fs::path(".") : fs::path(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw hkens::DataError("cannot create output directory '" + dir.string() + "'");
    }
    return dir;
}

int dispatch(CLI::App& app, int argc, char** argv) {
    InputArgs input;
    ConfigArgs config;
    std::string out_dir;
    bool emit_members = false;

    CLI::App* run = app.add_subcommand("run", "Run the full clustering pipeline");
    add_input_options(run, input);
    add_config_options(run, config);
    run->add_option("--out", out_dir, "Output directory");
    run->add_flag("--emit-members", emit_members, "Also write per-member partitions");

    CLI::App* baseline = app.add_subcommand("kmeans-baseline", "Plain k-means for comparison");
    add_input_options(baseline, input);
    add_config_options(baseline, config);
    baseline->add_option("--out", out_dir, "Output directory");

    CLI::App* orclus_only = app.add_subcommand("orclus-only", "Stop after subspace clustering");
    add_input_options(orclus_only, input);
    add_config_options(orclus_only, config);
    orclus_only->add_option("--out", out_dir, "Output directory");

    CLI::App* members_cmd = app.add_subcommand("members", "Emit the raw ensemble members");
    add_input_options(members_cmd, input);
    add_config_options(members_cmd, config);
    members_cmd->add_option("--out", out_dir, "Output directory");

    std::string partition_path;
    CLI::App* metrics = app.add_subcommand("metrics", "Score a stored partition");
    add_input_options(metrics, input);
    metrics->add_option("--partition", partition_path, "Partition file to score")->required();
    metrics->add_option("--out", out_dir, "Optional output directory");

    hkens::SynthSpec synth_spec;
    std::uint64_t synth_seed = 0;
    std::string synth_out;
    CLI::App* gen = app.add_subcommand("gen-synth", "Generate a labeled Gaussian-blob dataset");
    gen->add_option("--out", synth_out, "Output CSV path")->required();
    gen->add_option("--n", synth_spec.n_points, "Number of points");
    gen->add_option("--dims", synth_spec.dims, "Total dimensions");
    gen->add_option("--informative", synth_spec.informative, "Dimensions carrying blob structure");
    gen->add_option("--blobs", synth_spec.blobs, "Number of blobs");
    gen->add_option("--sigma", synth_spec.sigma, "Informative within-blob sigma");
    gen->add_option("--noise-sigma-ratio", synth_spec.noise_sigma_ratio,
                    "Noise sigma as a multiple of the informative sigma");
    gen->add_option("--sep-scale", synth_spec.sep_scale,
                    "Minimum center separation in within-blob RMS units");
    gen->add_option("--seed", synth_seed, "RNG seed");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            const hkens::Dataset data = load_dataset(input);
            const hkens::PipelineConfig cfg = resolve_config(config);
            const hkens::PipelineResult result = hkens::run_pipeline(data, cfg);
            const fs::path dir = prepare_out_dir(out_dir);
            hkens::write_partition(result.final_partition, dir / "partition.txt");
            result.report.save(dir / "report.txt");
            result.timings.save(dir / "timings.txt");
            if (emit_members) {
                for (std::size_t i = 0; i < result.merged.size(); ++i) {
                    hkens::write_partition(result.merged[i],
                                           dir / ("member_" + std::to_string(i + 1) + ".txt"));
                }
            }
            std::cout << "final clusters: " << result.final_partition.k()
                      << ", objective: " << result.final_objective << '\n'
                      << "wrote " << (dir / "partition.txt").string() << '\n';
        } else if (baseline->parsed()) {
            const hkens::Dataset data = load_dataset(input);
            const hkens::PipelineConfig cfg = resolve_config(config);
            const hkens::BaselineResult result = hkens::run_kmeans_baseline(data, cfg);
            const fs::path dir = prepare_out_dir(out_dir);
            hkens::write_partition(result.result.partition, dir / "partition.txt");
            result.report.save(dir / "report.txt");
            result.timings.save(dir / "timings.txt");
            std::cout << "baseline objective: " << result.result.final_objective << '\n';
        } else if (orclus_only->parsed()) {
            const hkens::Dataset raw = load_dataset(input);
            const hkens::PipelineConfig cfg = resolve_config(config);
            cfg.validate_for(raw.size(), raw.dim);
            const hkens::Dataset data = cfg.standardize ? hkens::standardize(raw) : raw;
            hkens::Rng rng(cfg.seed);
            hkens::Rng orclus_rng = rng.stream(1);
            hkens::OrclusOptions opts;
            opts.k0 = cfg.k0;
            opts.alpha = cfg.alpha;
            opts.beta = cfg.beta;
            opts.max_polish_iters = cfg.max_iters;
            const hkens::ProjectedClustering pc =
                hkens::orclus(data, cfg.k, cfg.d, opts, orclus_rng);
            const fs::path dir = prepare_out_dir(out_dir);
            hkens::write_partition(pc.partition, dir / "partition.txt");
            hkens::RunReport report;
            report.add("command", "orclus-only");
            report.add("data.name", raw.name);
            report.add("data.n", raw.size());
            report.add("data.dim", raw.dim);
            report.add("orclus.clusters", pc.partition.k());
            report.add("orclus.dim", pc.current_dim);
            report.add("orclus.objective", hkens::partition_objective(pc.partition, data));
            if (data.has_labels()) {
                report.add("final.purity", hkens::purity(pc.partition, data.labels));
                report.add("final.rand_index", hkens::rand_index(pc.partition, data.labels));
            }
            report.save(dir / "report.txt");
            std::cout << "orclus clusters: " << pc.partition.k() << '\n';
        } else if (members_cmd->parsed()) {
            const hkens::Dataset raw = load_dataset(input);
            const hkens::PipelineConfig cfg = resolve_config(config);
            cfg.validate_for(raw.size(), raw.dim);
            const hkens::Dataset data = cfg.standardize ? hkens::standardize(raw) : raw;
            hkens::Rng rng(cfg.seed);
            hkens::Rng orclus_rng = rng.stream(1);
            hkens::OrclusOptions opts;
            opts.k0 = cfg.k0;
            opts.alpha = cfg.alpha;
            opts.beta = cfg.beta;
            opts.max_polish_iters = cfg.max_iters;
            const hkens::ProjectedClustering pc =
                hkens::orclus(data, cfg.k, cfg.d, opts, orclus_rng);
            hkens::Rng members_rng = rng.stream(2);
            hkens::DivisiveOptions div_opts;
            div_opts.select = cfg.split_select;
            div_opts.max_iters = cfg.max_iters;
            div_opts.tol = cfg.tol;
            const std::vector<hkens::EnsembleMember> members = hkens::generate_members(
                pc, data, cfg.k, cfg.ensemble_size, members_rng, div_opts);
            const fs::path dir = prepare_out_dir(out_dir);
            hkens::RunReport report;
            report.add("command", "members");
            report.add("data.name", raw.name);
            report.add("data.n", raw.size());
            report.add("data.dim", raw.dim);
            for (const hkens::EnsembleMember& m : members) {
                hkens::write_partition(m.partition,
                                       dir / ("member_" + std::to_string(m.id) + ".txt"));
                const std::string prefix = "member." + std::to_string(m.id);
                report.add(prefix + ".k_value", m.k_value);
                report.add(prefix + ".objective", m.objective);
            }
            report.save(dir / "report.txt");
            std::cout << "wrote " << members.size() << " members\n";
        } else if (metrics->parsed()) {
            const hkens::Dataset data = load_dataset(input);
            const hkens::Partition partition = hkens::read_partition(partition_path, data);
            hkens::RunReport report;
            report.add("command", "metrics");
            report.add("data.name", data.name);
            report.add("data.n", data.size());
            report.add("partition.clusters", partition.k());
            report.add("partition.objective", hkens::partition_objective(partition, data));
            if (data.has_labels()) {
                report.add("partition.purity", hkens::purity(partition, data.labels));
                report.add("partition.rand_index", hkens::rand_index(partition, data.labels));
            }
            std::cout << report.to_text();
            if (!out_dir.empty()) {
                const fs::path dir = prepare_out_dir(out_dir);
                report.save(dir / "metrics.txt");
            }
        } else if (gen->parsed()) {
            hkens::Rng rng(synth_seed);
            const hkens::Dataset data = hkens::make_blobs(synth_spec, rng);
            const fs::path out_path(synth_out);
            if (out_path.has_parent_path()) {
                std::error_code ec;
                fs::create_directories(out_path.parent_path(), ec);
            }
            hkens::write_csv(data, out_path, true);
            std::cout << "wrote " << data.size() << " points, " << data.dim << " dims, "
                      << synth_spec.blobs << " blobs to " << out_path.string() << '\n';
        }
    } catch (const hkens::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const hkens::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 3;
    } catch (const hkens::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"H-K ensemble clustering for high-dimensional data"};
    app.name("hkens");
    return dispatch(app, argc, argv);
}
