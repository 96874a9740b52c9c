#pragma once

#include "tmpfp/config.hpp"
#include "tmpfp/graph.hpp"
#include "tmpfp/tensor.hpp"
#include "tmpfp/vectorization.hpp"

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tmpfp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// ∞-norm distance between two diagram points.
double point_cost(const Bar& a, const Bar& b) noexcept;
/// ∞-norm distance from a point to its diagonal projection.
double diagonal_cost(const Bar& a) noexcept;

/// Wasserstein-p distance with diagonal augmentation; p = kInfinity gives the
/// bottleneck distance. p < 1 is rejected.
double wasserstein(std::span<const Bar> a, std::span<const Bar> b, double p);

/// Minimum-cost perfect assignment on a square matrix. Returns the column of each row.
std::vector<std::size_t> solve_assignment(const std::vector<std::vector<double>>& cost);

/// Max over slices of wasserstein(g1[j], g2[j], p).
double zpd_matching_distance(const std::vector<std::vector<Bar>>& g1, const std::vector<std::vector<Bar>>& g2,
                             double p);

/// Max over axis-0 slices of the slice metric. Auto uses L2 for images and the
/// sup norm otherwise.
double tmp_distance(const TmpTensor& a, const TmpTensor& b, SliceMetric metric = SliceMetric::Auto);

struct StabilityPair {
    double lhs;
    double rhs;
    /// lhs/rhs, or NaN when rhs = 0.
    double ratio;
    bool violation;
};

struct StabilityReport {
    std::vector<StabilityPair> pairs;
    double constant = 1.0;
    double p = kInfinity;
    std::string vectorization;
    double max_ratio = 0.0;
    std::size_t violations = 0;

    bool passed() const noexcept { return violations == 0; }
};

/// Replacement vectorization for the stability harness: maps a slice's bars and
/// the snapshot count to a vector.
using CustomVectorizer = std::function<std::vector<double>(std::span<const Bar>, std::size_t)>;

/// Runs the pipeline on `base` and every perturbation with the base's thresholds
/// and image bounds, and checks D(M(G), M(H)) <= C · D(ZPD(G), ZPD(H)) per
/// pair, both sides maximized over the configured homology dimensions.
StabilityReport stability_check(const TemporalGraph& base, const std::vector<TemporalGraph>& perturbations,
                                const PipelineConfig& config, double constant, double p,
                                const CustomVectorizer& custom = nullptr, double tolerance = 1e-9);

}  // namespace tmpfp
