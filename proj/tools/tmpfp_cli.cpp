#include "tmpfp/bench.hpp"
#include "tmpfp/config.hpp"
#include "tmpfp/distance.hpp"
#include "tmpfp/error.hpp"
#include "tmpfp/io.hpp"
#include "tmpfp/pipeline.hpp"
#include "tmpfp/plot.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace tmpfp;

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

struct SchemaFlags {
    std::string time = "time", source = "source", target = "target", weight = "weight";
    bool no_weight = false;
};

void add_schema_flags(CLI::App* cmd, SchemaFlags& f) {
    cmd->add_option("--time-col", f.time, "Time column name");
    cmd->add_option("--source-col", f.source, "Source node column name");
    cmd->add_option("--target-col", f.target, "Target node column name");
    cmd->add_option("--weight-col", f.weight, "Weight column name");
    cmd->add_flag("--no-weight", f.no_weight, "Input has no weight column; all weights are 1");
}

// Options shared by the pipeline commands. Each one overrides the config file
// only when given on the command line.
struct PipelineFlags {
    std::string config_path;
    std::string input;
    std::string filter, orientation, vectorization, union_mode, metric;
    std::size_t resolution = 0, level = 0, rows = 0, cols = 0, width = 0, stride = 0, active = 0;
    int maxdim = 0;
    double power = 0, sigma = 0;
    std::vector<double> thresholds;
    std::vector<int> dims;
    std::string output_dir, prefix;
    SchemaFlags schema;
    CLI::App* cmd = nullptr;
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags& f) {
    f.cmd = cmd;
    cmd->add_option("--config", f.config_path, "JSON config file");
    cmd->add_option("input,--input", f.input, "Edge-list CSV");
    cmd->add_option("--filter", f.filter, "degree | closeness | betweenness | edge-weight | power");
    cmd->add_option("--orientation", f.orientation, "sublevel | superlevel");
    cmd->add_option("--resolution,-m", f.resolution, "Number of quantile thresholds");
    cmd->add_option("--thresholds", f.thresholds, "Explicit increasing thresholds");
    cmd->add_option("--maxdim", f.maxdim, "Largest simplex dimension");
    cmd->add_option("--dims", f.dims, "Homology dimensions");
    cmd->add_option("--vectorization", f.vectorization,
                    "landscape | silhouette | betti | betti-fast | entropy | image");
    cmd->add_option("--level", f.level, "Landscape level");
    cmd->add_option("--power", f.power, "Silhouette weight exponent");
    cmd->add_option("--image-rows", f.rows, "Persistence image rows");
    cmd->add_option("--image-cols", f.cols, "Persistence image columns");
    cmd->add_option("--sigma", f.sigma, "Persistence image Gaussian width (0: one pixel)");
    cmd->add_option("--window-width", f.width, "Sliding window width (0: whole sequence)");
    cmd->add_option("--window-stride", f.stride, "Sliding window stride");
    cmd->add_option("--union-mode", f.union_mode, "clique-of-union | simplex-union");
    cmd->add_option("--active-nodes", f.active, "Keep only the N most active nodes");
    cmd->add_option("--output-dir", f.output_dir, "Directory for output files");
    cmd->add_option("--prefix", f.prefix, "Output file name prefix");
    add_schema_flags(cmd, f.schema);
}

bool given(const PipelineFlags& f, const std::string& name) { return f.cmd->count(name) > 0; }

EdgeListSchema to_schema(const SchemaFlags& f) {
    EdgeListSchema s{f.time, f.source, f.target, std::nullopt};
    if (!f.no_weight) s.weight = f.weight;
    return s;
}

PipelineConfig resolve_config(const PipelineFlags& f) {
    PipelineConfig c = f.config_path.empty() ? PipelineConfig{} : load_config(f.config_path);
    if (given(f, "--input")) c.input = f.input;
    if (given(f, "--filter")) c.filter.kind = parse_filter_kind(f.filter);
    if (given(f, "--orientation")) c.filter.orientation = parse_orientation(f.orientation);
    if (given(f, "--resolution")) c.resolution = f.resolution;
    if (given(f, "--thresholds")) c.thresholds = f.thresholds;
    if (given(f, "--maxdim")) c.maxdim = f.maxdim;
    if (given(f, "--dims")) c.dims = f.dims;
    if (given(f, "--vectorization")) c.vectorization = parse_vectorization_kind(f.vectorization);
    if (given(f, "--level")) c.params.level = f.level;
    if (given(f, "--power")) c.params.power = f.power;
    if (given(f, "--image-rows")) c.params.rows = f.rows;
    if (given(f, "--image-cols")) c.params.cols = f.cols;
    if (given(f, "--sigma")) c.params.sigma = f.sigma;
    if (given(f, "--window-width")) c.window_width = f.width;
    if (given(f, "--window-stride")) c.window_stride = f.stride;
    if (given(f, "--union-mode")) c.union_mode = parse_union_mode(f.union_mode);
    if (given(f, "--active-nodes")) c.active_nodes = f.active;
    if (given(f, "--output-dir")) c.output_dir = f.output_dir;
    if (given(f, "--prefix")) c.output_prefix = f.prefix;
    if (given(f, "--time-col")) c.schema.time = f.schema.time;
    if (given(f, "--source-col")) c.schema.source = f.schema.source;
    if (given(f, "--target-col")) c.schema.target = f.schema.target;
    if (given(f, "--weight-col")) c.schema.weight = f.schema.weight;
    if (f.schema.no_weight) c.schema.weight = std::nullopt;
    if (c.input.empty()) throw ValidationError("no input file given");
    c.validate();
    return c;
}

TemporalGraph load_graph(const std::string& path, const EdgeListSchema& schema) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return parse_temporal_edge_list(in, schema);
}

std::vector<TemporalGraph> windows_of(const TemporalGraph& tg, const PipelineConfig& c) {
    if (c.window_width == 0) return {tg};
    return window(tg, c.window_width, c.window_stride);
}

int cmd_ingest(const std::string& path, const SchemaFlags& flags) {
    auto tg = load_graph(path, to_schema(flags));
    std::cout << "T=" << tg.length() << ", nodes={";
    bool first = true;
    for (const auto& n : tg.node_universe()) {
        std::cout << (first ? "" : ",") << n.label();
        first = false;
    }
    std::cout << "}\n";
    std::cout << "t,nodes,edges,weight_min,weight_max,weight_mean\n";
    for (std::size_t t = 1; t <= tg.length(); ++t) {
        const auto& s = tg.at(t);
        double lo = 0, hi = 0, sum = 0;
        bool any = false;
        for (const auto& [e, w] : s.edges()) {
            lo = any ? std::min(lo, w) : w;
            hi = any ? std::max(hi, w) : w;
            sum += w;
            any = true;
        }
        double mean = s.edge_count() ? sum / static_cast<double>(s.edge_count()) : 0.0;
        std::cout << t << ',' << s.node_count() << ',' << s.edge_count() << ',' << format_real(lo) << ','
                  << format_real(hi) << ',' << format_real(mean) << '\n';
    }
    return 0;
}

int cmd_fingerprint(const PipelineFlags& flags) {
    auto config = resolve_config(flags);
    auto tg = prepare_graph(load_graph(config.input, config.schema), config);
    // One threshold grid for the whole dataset so windows share their levels.
    FingerprintFrame frame{choose_thresholds(tg, config), std::nullopt};
    PipelineConfig per_window = config;
    per_window.active_nodes = 0;
    std::filesystem::create_directories(config.output_dir);
    auto wins = windows_of(tg, config);
    for (std::size_t w = 0; w < wins.size(); ++w) {
        auto fp = fingerprint(wins[w], per_window, frame);
        for (std::size_t d = 0; d < config.dims.size(); ++d) {
            auto& tensor = fp.tensors[d];
            tensor.metadata()["window"] = {{"index", w + 1},
                                           {"start", w * config.window_stride + 1},
                                           {"count", wins.size()}};
            std::ostringstream name;
            name << config.output_prefix << "_w" << (w + 1) << "_h" << config.dims[d] << ".tmpt";
            auto path = (std::filesystem::path(config.output_dir) / name.str()).string();
            write_tensor_file(path, tensor);
            std::cout << path << " shape=(";
            for (std::size_t a = 0; a < tensor.shape().size(); ++a)
                std::cout << (a ? "," : "") << tensor.shape()[a];
            std::cout << ")\n";
        }
    }
    return 0;
}

int cmd_pd(const PipelineFlags& flags, const std::string& output) {
    auto config = resolve_config(flags);
    auto tg = prepare_graph(load_graph(config.input, config.schema), config);
    auto grid = choose_thresholds(tg, config);
    auto bif = sublevel_bifiltration(tg, config.filter, grid, config.maxdim);
    auto table = diagram_table(slice_diagrams(bif, config.union_mode), config.dims, tg.length());
    if (output.empty() || output == "-") {
        write_diagram_table(std::cout, table);
    } else {
        std::ofstream out(output);
        if (!out) throw ValidationError("cannot write '" + output + "'");
        write_diagram_table(out, table);
    }
    return 0;
}

bool is_tensor_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    char magic[4] = {};
    in.read(magic, 4);
    return in.gcount() == 4 && std::string(magic, 4) == "TMPT";
}

DiagramTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return read_diagram_table(in);
}

int cmd_distance(const std::string& a, const std::string& b, const std::string& metric, double p) {
    const bool ta = is_tensor_file(a), tb = is_tensor_file(b);
    if (ta != tb) throw ValidationError("cannot compare a tensor with a diagram dump");
    double d = 0.0;
    if (ta) {
        d = tmp_distance(read_tensor_file(a), read_tensor_file(b), parse_slice_metric(metric));
    } else {
        auto da = load_table(a), db = load_table(b);
        if (da.slices != db.slices) throw ValidationError("diagram dumps have different slice counts");
        std::vector<int> dims;
        for (const auto* t : {&da, &db})
            for (const auto& r : t->records)
                if (std::find(dims.begin(), dims.end(), r.dim) == dims.end()) dims.push_back(r.dim);
        for (int k : dims) {
            std::vector<std::vector<Bar>> ga(da.slices), gb(db.slices);
            for (const auto& r : da.records)
                if (r.dim == k) ga.at(r.slice - 1).push_back({r.birth, r.death});
            for (const auto& r : db.records)
                if (r.dim == k) gb.at(r.slice - 1).push_back({r.birth, r.death});
            d = std::max(d, zpd_matching_distance(ga, gb, p));
        }
    }
    std::cout << format_real(d) << '\n';
    return 0;
}

int cmd_plot(const std::string& input, const std::string& output) {
    std::ofstream csv(output + ".csv"), svg(output + ".svg");
    if (!csv || !svg) throw ValidationError("cannot write plot files for '" + output + "'");
    if (is_tensor_file(input)) {
        auto t = read_tensor_file(input);
        write_tensor_csv(csv, t);
        write_tensor_svg(svg, t);
    } else {
        auto table = load_table(input);
        write_diagram_csv(csv, table);
        write_diagram_svg(svg, table);
    }
    std::cout << output << ".csv\n" << output << ".svg\n";
    return 0;
}

int cmd_bench(const BenchConfig& base, bool sweep, const std::string& output) {
    std::vector<BenchConfig> runs{base};
    if (sweep) {
        runs.clear();
        for (double scale : {0.25, 0.5, 1.0}) {
            BenchConfig c = base;
            c.nodes = std::max<std::size_t>(2, static_cast<std::size_t>(static_cast<double>(base.nodes) * scale));
            runs.push_back(c);
        }
    }
    std::vector<BenchResult> results;
    for (const auto& c : runs) results.push_back(run_bench(c));
    if (output.empty() || output == "-") {
        write_bench_csv(std::cout, results);
    } else {
        std::ofstream out(output);
        if (!out) throw ValidationError("cannot write '" + output + "'");
        write_bench_csv(out, results);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal multipersistence fingerprints of dynamic graphs"};
    app.require_subcommand(1);

    auto* ingest = app.add_subcommand("ingest", "Summarize an edge-list file");
    std::string ingest_path;
    SchemaFlags ingest_schema;
    ingest->add_option("input", ingest_path, "Edge-list CSV")->required();
    add_schema_flags(ingest, ingest_schema);

    auto* fp = app.add_subcommand("fingerprint", "Write fingerprint tensors, one file per window and dimension");
    PipelineFlags fp_flags;
    add_pipeline_flags(fp, fp_flags);

    auto* pd = app.add_subcommand("pd", "Dump the zigzag diagrams of every slice");
    PipelineFlags pd_flags;
    std::string pd_output;
    add_pipeline_flags(pd, pd_flags);
    pd->add_option("--output,-o", pd_output, "Output file (default: standard output)");

    auto* dist = app.add_subcommand("distance", "Distance between two tensor files or two diagram dumps");
    std::string dist_a, dist_b, dist_metric = "auto";
    std::string dist_p = "inf";
    dist->add_option("first", dist_a)->required();
    dist->add_option("second", dist_b)->required();
    dist->add_option("--metric", dist_metric, "Tensor slice metric: auto | sup | l2");
    dist->add_option("--p", dist_p, "Wasserstein order for diagram dumps (number or inf)");

    auto* plot = app.add_subcommand("plot", "Render a tensor or diagram dump as CSV and SVG");
    std::string plot_in, plot_out;
    plot->add_option("input", plot_in)->required();
    plot->add_option("--output,-o", plot_out, "Output path without extension")->required();

    auto* bench = app.add_subcommand("bench", "Time shared versus per-cell fast-Betti computation");
    BenchConfig bc;
    std::string bench_filter = "degree", bench_out;
    bool bench_sweep = false;
    bench->add_option("--nodes", bc.nodes);
    bench->add_option("--snapshots", bc.snapshots);
    bench->add_option("--resolution", bc.resolution);
    bench->add_option("--churn", bc.churn);
    bench->add_option("--density", bc.density);
    bench->add_option("--seed", bc.seed);
    bench->add_option("--filter", bench_filter);
    bench->add_flag("--sweep", bench_sweep, "Also run at 1/4 and 1/2 of the node count");
    bench->add_option("--output,-o", bench_out, "CSV output (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*ingest) return cmd_ingest(ingest_path, ingest_schema);
        if (*fp) return cmd_fingerprint(fp_flags);
        if (*pd) return cmd_pd(pd_flags, pd_output);
        if (*dist) {
            double p = dist_p == "inf" ? kInfinity : std::stod(dist_p);
            return cmd_distance(dist_a, dist_b, dist_metric, p);
        }
        if (*plot) return cmd_plot(plot_in, plot_out);
        if (*bench) {
            bc.filter.kind = parse_filter_kind(bench_filter);
            return cmd_bench(bc, bench_sweep, bench_out);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad number: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return 0;
}
