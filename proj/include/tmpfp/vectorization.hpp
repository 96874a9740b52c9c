#pragma once

#include "tmpfp/complex.hpp"
#include "tmpfp/zigzag.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tmpfp {

/// Interval in real time units. Zigzag position s sits at time (s+1)/2.
struct Bar {
    double birth;
    double death;

    double persistence() const noexcept { return death - birth; }
    friend auto operator<=>(const Bar&, const Bar&) = default;
};

std::vector<Bar> to_time_bars(const ZigzagDiagram& pd);

/// Strictly increasing evaluation points.
struct EvaluationGrid {
    std::vector<double> points;
};

/// Thresholds plus their midpoints: q thresholds give 2q-1 points.
EvaluationGrid grid_with_midpoints(const std::vector<double>& thresholds);

/// {1, 1.25, ..., T}: the zigzag times {1, 1.5, ..., T} with midpoints, 4T-3 points.
EvaluationGrid time_grid(std::size_t T);

/// Tent function of a bar: rises with slope 1 from the birth, falls to the death.
double tent(const Bar& bar, double t) noexcept;

/// Level-th largest tent value at each grid point (level 1 is the pointwise max).
std::vector<double> landscape_vector(std::span<const Bar> bars, const EvaluationGrid& grid, std::size_t level = 1);

/// Tents averaged with weights (death-birth)^p; zero when all weights vanish.
std::vector<double> silhouette_vector(std::span<const Bar> bars, const EvaluationGrid& grid, double p = 1.0);

/// Number of bars containing each index 1..2T-1.
std::vector<double> betti_vector_zigzag(const ZigzagDiagram& pd, std::size_t T);

/// β_k of each complex, with no zigzag computation.
std::vector<double> betti_vector_fast(const std::vector<SimplicialComplex>& complexes_at_t, int k);

/// Life entropy of the bars alive (birth <= t <= death) at each grid point, natural log.
std::vector<double> entropy_vector(std::span<const Bar> bars, const EvaluationGrid& grid);

/// Pixel rectangle covered by a persistence image: birth on columns,
/// persistence on rows.
struct ImageBounds {
    double birth_min = 0.0;
    double birth_max = 1.0;
    double pers_min = 0.0;
    double pers_max = 1.0;

    friend bool operator==(const ImageBounds&, const ImageBounds&) = default;
};

/// Min/max of birth and persistence over all bars given. A range of zero
/// width is widened by 0.5 on both sides; no bars gives the unit square.
ImageBounds image_bounds(std::span<const Bar> bars);

using WeightFn = std::function<double(const Bar&)>;

/// Persistence, clamped to be nonnegative.
double persistence_weight(const Bar& bar);

/// Rows × cols image, row-major; row r covers persistence band r from the
/// bottom, column c covers birth band c. Each pixel holds the exact Gaussian
/// mass of every bar over the pixel rectangle, times the bar's weight.
/// sigma <= 0 is rejected.
std::vector<double> persistence_image(std::span<const Bar> bars, std::size_t rows, std::size_t cols, double sigma,
                                      const ImageBounds& bounds, const WeightFn& weight = persistence_weight);

/// Mass of N(mu, sigma²) on [lo, hi].
double gaussian_mass(double lo, double hi, double mu, double sigma) noexcept;

enum class VectorizationKind { Landscape, Silhouette, BettiZigzag, BettiFast, Entropy, Image };

std::string to_string(VectorizationKind kind);
VectorizationKind parse_vectorization_kind(std::string_view name);

struct VectorizationParams {
    std::size_t level = 1;
    double power = 1.0;
    std::size_t rows = 50;
    std::size_t cols = 50;
    /// Gaussian width; 0 selects one birth-axis pixel width.
    double sigma = 0.0;

    friend bool operator==(const VectorizationParams&, const VectorizationParams&) = default;
};

}  // namespace tmpfp
