#include "tmpfp/config.hpp"

#include "tmpfp/error.hpp"

#include <fstream>
#include <set>

namespace tmpfp {

std::string to_string(SliceMetric m) {
    switch (m) {
    case SliceMetric::Auto: return "auto";
    case SliceMetric::Sup: return "sup";
    case SliceMetric::L2: return "l2";
    }
    return "unknown";
}

SliceMetric parse_slice_metric(std::string_view name) {
    if (name == "auto") return SliceMetric::Auto;
    if (name == "sup") return SliceMetric::Sup;
    if (name == "l2") return SliceMetric::L2;
    throw ValidationError("unknown slice metric '" + std::string(name) + "'");
}

std::string to_string(UnionMode m) {
    return m == UnionMode::CliqueOfUnionGraph ? "clique-of-union" : "simplex-union";
}

UnionMode parse_union_mode(std::string_view name) {
    if (name == "clique-of-union") return UnionMode::CliqueOfUnionGraph;
    if (name == "simplex-union") return UnionMode::SimplexUnion;
    throw ValidationError("unknown union mode '" + std::string(name) + "'");
}

void PipelineConfig::validate() const {
    if (maxdim < 1 || maxdim > 3) throw ValidationError("maxdim must be between 1 and 3");
    if (dims.empty()) throw ValidationError("at least one homology dimension is required");
    for (int k : dims)
        if (k < 0 || k >= maxdim) throw ValidationError("homology dimension must lie in 0..maxdim-1");
    if (thresholds.empty() && resolution < 1) throw ValidationError("resolution must be at least 1");
    if (!thresholds.empty()) explicit_grid(thresholds);
    if (window_stride < 1) throw ValidationError("window stride must be at least 1");
    if (params.level < 1) throw ValidationError("landscape level must be at least 1");
    if (!(params.power >= 0.0)) throw ValidationError("silhouette power must be nonnegative");
    if (params.rows < 1 || params.cols < 1) throw ValidationError("image size must be positive");
    if (params.sigma < 0.0) throw ValidationError("image sigma must be nonnegative");
}

void to_json(nlohmann::json& j, const PipelineConfig& c) {
    j = nlohmann::json{
        {"filter", to_string(c.filter.kind)},
        {"orientation", to_string(c.filter.orientation)},
        {"resolution", c.resolution},
        {"thresholds", c.thresholds},
        {"maxdim", c.maxdim},
        {"dims", c.dims},
        {"vectorization", to_string(c.vectorization)},
        {"level", c.params.level},
        {"power", c.params.power},
        {"image_rows", c.params.rows},
        {"image_cols", c.params.cols},
        {"sigma", c.params.sigma},
        {"window_width", c.window_width},
        {"window_stride", c.window_stride},
        {"union_mode", to_string(c.union_mode)},
        {"active_nodes", c.active_nodes},
        {"slice_metric", to_string(c.slice_metric)},
        {"time_column", c.schema.time},
        {"source_column", c.schema.source},
        {"target_column", c.schema.target},
        {"weight_column", c.schema.weight ? nlohmann::json(*c.schema.weight) : nlohmann::json(nullptr)},
        {"input", c.input},
        {"output_dir", c.output_dir},
        {"output_prefix", c.output_prefix},
    };
}

void from_json(const nlohmann::json& j, PipelineConfig& c) {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    static const std::set<std::string> known{
        "filter",       "orientation", "resolution",   "thresholds",    "maxdim",       "dims",
        "vectorization", "level",      "power",        "image_rows",    "image_cols",   "sigma",
        "window_width", "window_stride", "union_mode", "active_nodes",  "slice_metric", "time_column",
        "source_column", "target_column", "weight_column", "input",     "output_dir",   "output_prefix"};
    for (const auto& [key, value] : j.items())
        if (!known.contains(key)) throw ValidationError("unknown config key '" + key + "'");
    try {
        if (j.contains("filter")) c.filter.kind = parse_filter_kind(j.at("filter").get<std::string>());
        if (j.contains("orientation")) c.filter.orientation = parse_orientation(j.at("orientation").get<std::string>());
        if (j.contains("resolution")) c.resolution = j.at("resolution").get<std::size_t>();
        if (j.contains("thresholds")) c.thresholds = j.at("thresholds").get<std::vector<double>>();
        if (j.contains("maxdim")) c.maxdim = j.at("maxdim").get<int>();
        if (j.contains("dims")) c.dims = j.at("dims").get<std::vector<int>>();
        if (j.contains("vectorization"))
            c.vectorization = parse_vectorization_kind(j.at("vectorization").get<std::string>());
        if (j.contains("level")) c.params.level = j.at("level").get<std::size_t>();
        if (j.contains("power")) c.params.power = j.at("power").get<double>();
        if (j.contains("image_rows")) c.params.rows = j.at("image_rows").get<std::size_t>();
        if (j.contains("image_cols")) c.params.cols = j.at("image_cols").get<std::size_t>();
        if (j.contains("sigma")) c.params.sigma = j.at("sigma").get<double>();
        if (j.contains("window_width")) c.window_width = j.at("window_width").get<std::size_t>();
        if (j.contains("window_stride")) c.window_stride = j.at("window_stride").get<std::size_t>();
        if (j.contains("union_mode")) c.union_mode = parse_union_mode(j.at("union_mode").get<std::string>());
        if (j.contains("active_nodes")) c.active_nodes = j.at("active_nodes").get<std::size_t>();
        if (j.contains("slice_metric")) c.slice_metric = parse_slice_metric(j.at("slice_metric").get<std::string>());
        if (j.contains("time_column")) c.schema.time = j.at("time_column").get<std::string>();
        if (j.contains("source_column")) c.schema.source = j.at("source_column").get<std::string>();
        if (j.contains("target_column")) c.schema.target = j.at("target_column").get<std::string>();
        if (j.contains("weight_column")) {
            const auto& w = j.at("weight_column");
            c.schema.weight = w.is_null() ? std::nullopt : std::optional<std::string>(w.get<std::string>());
        }
        if (j.contains("input")) c.input = j.at("input").get<std::string>();
        if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("output_prefix")) c.output_prefix = j.at("output_prefix").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad config value: ") + e.what());
    }
}

PipelineConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    PipelineConfig c = j.get<PipelineConfig>();
    c.validate();
    return c;
}

}  // namespace tmpfp
