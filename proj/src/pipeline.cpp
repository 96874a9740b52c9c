#include "tmpfp/pipeline.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/homology.hpp"
#include "tmpfp/parallel.hpp"

#include <algorithm>

namespace tmpfp {

ThresholdGrid choose_thresholds(const TemporalGraph& tg, const PipelineConfig& config) {
    if (!config.thresholds.empty()) return explicit_grid(config.thresholds);
    auto pool = filter_value_pool(tg, config.filter.kind);
    if (pool.empty()) throw ValidationError("the filter produced no values to choose thresholds from");
    return quantile_thresholds(pool, config.resolution);
}

TemporalGraph prepare_graph(const TemporalGraph& tg, const PipelineConfig& config) {
    if (config.active_nodes == 0) return tg;
    return select_active_nodes(tg, config.active_nodes);
}

std::vector<std::vector<ZigzagDiagram>> slice_diagrams(const Bifiltration& bif, UnionMode mode) {
    std::vector<std::vector<ZigzagDiagram>> out(bif.levels());
    parallel_for(bif.levels(), [&](std::size_t j) {
        out[j] = zigzag_persistence_all(build_zigzag_sequence(bif.slice_graphs(j + 1), bif.maxdim(), mode));
    });
    return out;
}

std::vector<std::vector<std::vector<std::size_t>>> fast_betti_table(const TemporalGraph& tg, const FilterSpec& filter,
                                                                    const ThresholdGrid& grid, int maxdim) {
    std::vector<std::vector<std::vector<std::size_t>>> out(tg.length());
    parallel_for(tg.length(), [&](std::size_t t) {
        out[t] = betti_by_level(entry_levels(tg.snapshots()[t], filter, grid, maxdim), grid.resolution(), maxdim);
    });
    return out;
}

SliceVector vectorize_slice(const ZigzagDiagram& pd, VectorizationKind kind, const VectorizationParams& params,
                            std::size_t T, const ImageBounds& bounds) {
    auto bars = to_time_bars(pd);
    SliceVector out;
    switch (kind) {
    case VectorizationKind::Landscape: out.values = landscape_vector(bars, time_grid(T), params.level); break;
    case VectorizationKind::Silhouette: out.values = silhouette_vector(bars, time_grid(T), params.power); break;
    case VectorizationKind::Entropy: out.values = entropy_vector(bars, time_grid(T)); break;
    case VectorizationKind::BettiZigzag: out.values = betti_vector_zigzag(pd, T); break;
    case VectorizationKind::Image: {
        double sigma = params.sigma > 0.0
                           ? params.sigma
                           : (bounds.birth_max - bounds.birth_min) / static_cast<double>(params.cols);
        out.values = persistence_image(bars, params.rows, params.cols, sigma, bounds);
        out.shape = {static_cast<std::uint32_t>(params.rows), static_cast<std::uint32_t>(params.cols)};
        return out;
    }
    case VectorizationKind::BettiFast:
        throw ContractViolation("fast Betti vectors are computed from complexes, not diagrams");
    }
    out.shape = {static_cast<std::uint32_t>(out.values.size())};
    return out;
}

nlohmann::json tensor_metadata(const PipelineConfig& config, const ThresholdGrid& grid, std::size_t T, int dim) {
    nlohmann::json axes = nlohmann::json::array({"level"});
    switch (config.vectorization) {
    case VectorizationKind::Image:
        axes.push_back("persistence");
        axes.push_back("birth");
        break;
    case VectorizationKind::BettiZigzag: axes.push_back("zigzag-index"); break;
    case VectorizationKind::BettiFast: axes.push_back("time"); break;
    default: axes.push_back("time-grid"); break;
    }
    return {
        {"vectorization", to_string(config.vectorization)},
        {"homology_dim", dim},
        {"axes", axes},
        {"snapshots", T},
        {"grid", {{"values", grid.values}, {"rule", grid.rule}, {"requested", grid.requested}}},
        {"filter", to_string(config.filter.kind)},
        {"orientation", to_string(config.filter.orientation)},
        {"maxdim", config.maxdim},
        {"union_mode", to_string(config.union_mode)},
        {"params",
         {{"level", config.params.level},
          {"power", config.params.power},
          {"image_rows", config.params.rows},
          {"image_cols", config.params.cols},
          {"sigma", config.params.sigma}}},
    };
}

Fingerprint fingerprint(const TemporalGraph& input, const PipelineConfig& config,
                        const std::optional<FingerprintFrame>& frame, bool with_diagrams) {
    config.validate();
    const TemporalGraph tg = prepare_graph(input, config);
    Fingerprint fp;
    fp.grid = frame ? frame->grid : choose_thresholds(tg, config);
    fp.length = tg.length();
    const std::size_t m = fp.grid.resolution();
    const std::size_t T = tg.length();

    if (config.vectorization == VectorizationKind::BettiFast) {
        auto table = fast_betti_table(tg, config.filter, fp.grid, config.maxdim);
        for (int k : config.dims) {
            std::vector<double> data(m * T);
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t t = 0; t < T; ++t) data[j * T + t] = static_cast<double>(table[t][j][k]);
            fp.tensors.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(m),
                                                               static_cast<std::uint32_t>(T)},
                                    std::move(data), tensor_metadata(config, fp.grid, T, k));
        }
        if (!with_diagrams) return fp;
    }

    auto bif = sublevel_bifiltration(tg, config.filter, fp.grid, config.maxdim);
    fp.diagrams = slice_diagrams(bif, config.union_mode);
    if (config.vectorization == VectorizationKind::BettiFast) return fp;

    for (std::size_t d = 0; d < config.dims.size(); ++d) {
        const auto k = static_cast<std::size_t>(config.dims[d]);
        ImageBounds bounds;
        if (frame && frame->bounds) {
            bounds = frame->bounds->at(d);
        } else if (config.vectorization == VectorizationKind::Image) {
            std::vector<Bar> all;
            for (const auto& slice : fp.diagrams) {
                auto bars = to_time_bars(slice[k]);
                all.insert(all.end(), bars.begin(), bars.end());
            }
            bounds = image_bounds(all);
        }
        fp.bounds.push_back(bounds);
        std::vector<SliceVector> slices(m);
        parallel_for(m, [&](std::size_t j) {
            slices[j] = vectorize_slice(fp.diagrams[j][k], config.vectorization, config.params, T, bounds);
        });
        fp.tensors.push_back(assemble_tmp(slices, tensor_metadata(config, fp.grid, T, config.dims[d])));
    }
    return fp;
}

}  // namespace tmpfp
