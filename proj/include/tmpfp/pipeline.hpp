#pragma once

#include "tmpfp/config.hpp"
#include "tmpfp/filtration.hpp"
#include "tmpfp/tensor.hpp"
#include "tmpfp/vectorization.hpp"
#include "tmpfp/zigzag.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tmpfp {

/// Explicit thresholds from the config, else quantiles of the filter values.
ThresholdGrid choose_thresholds(const TemporalGraph& tg, const PipelineConfig& config);

/// Applies the node-activity restriction of the config.
TemporalGraph prepare_graph(const TemporalGraph& tg, const PipelineConfig& config);

/// Zigzag diagrams of every slice, indexed [j-1][k] for k = 0..maxdim-1.
std::vector<std::vector<ZigzagDiagram>> slice_diagrams(const Bifiltration& bif, UnionMode mode);

/// β_k of every cell from one leveled persistence pass per snapshot.
/// Result is indexed [t-1][j-1][k] for k = 0..maxdim.
std::vector<std::vector<std::vector<std::size_t>>> fast_betti_table(const TemporalGraph& tg, const FilterSpec& filter,
                                                                    const ThresholdGrid& grid, int maxdim);

/// Vectorization of one slice's bars. T is the snapshot count; bounds are used by images.
SliceVector vectorize_slice(const ZigzagDiagram& pd, VectorizationKind kind, const VectorizationParams& params,
                            std::size_t T, const ImageBounds& bounds);

/// Shared inputs when several graphs must be compared on the same axes.
struct FingerprintFrame {
    ThresholdGrid grid;
    /// Per entry of config.dims; computed from the graph when absent.
    std::optional<std::vector<ImageBounds>> bounds;
};

struct Fingerprint {
    ThresholdGrid grid;
    std::size_t length = 0;
    /// [j-1][k], k = 0..maxdim-1. Empty for fast Betti unless requested.
    std::vector<std::vector<ZigzagDiagram>> diagrams;
    /// One tensor per entry of config.dims.
    std::vector<TmpTensor> tensors;
    std::vector<ImageBounds> bounds;
};

/// Full pipeline for one temporal graph (no windowing).
Fingerprint fingerprint(const TemporalGraph& tg, const PipelineConfig& config,
                        const std::optional<FingerprintFrame>& frame = std::nullopt, bool with_diagrams = false);

/// Tensor metadata describing axes, grid and provenance.
nlohmann::json tensor_metadata(const PipelineConfig& config, const ThresholdGrid& grid, std::size_t T, int dim);

}  // namespace tmpfp
