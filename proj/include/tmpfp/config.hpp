#pragma once

#include "tmpfp/filtration.hpp"
#include "tmpfp/graph.hpp"
#include "tmpfp/vectorization.hpp"
#include "tmpfp/zigzag.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tmpfp {

enum class SliceMetric { Auto, Sup, L2 };

std::string to_string(SliceMetric m);
SliceMetric parse_slice_metric(std::string_view name);
std::string to_string(UnionMode m);
UnionMode parse_union_mode(std::string_view name);

/// Every knob of the fingerprint pipeline. Defaults: degree sublevel filter,
/// 50 quantile thresholds, complexes up to dimension 2, homology in dimensions
/// 0 and 1, landscape vectorization, whole sequence as one window.
struct PipelineConfig {
    FilterSpec filter;
    std::size_t resolution = 50;
    /// When non-empty, used instead of quantile thresholds.
    std::vector<double> thresholds;
    int maxdim = 2;
    std::vector<int> dims{0, 1};
    VectorizationKind vectorization = VectorizationKind::Landscape;
    VectorizationParams params;
    /// 0 means the whole sequence.
    std::size_t window_width = 0;
    std::size_t window_stride = 1;
    UnionMode union_mode = UnionMode::CliqueOfUnionGraph;
    /// Keep only the most active nodes; 0 keeps all.
    std::size_t active_nodes = 0;
    SliceMetric slice_metric = SliceMetric::Auto;
    EdgeListSchema schema;
    std::string input;
    std::string output_dir = ".";
    std::string output_prefix = "fingerprint";

    /// Throws ValidationError when a value is out of range.
    void validate() const;

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

void to_json(nlohmann::json& j, const PipelineConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
void from_json(const nlohmann::json& j, PipelineConfig& c);

PipelineConfig load_config(const std::string& path);

}  // namespace tmpfp
