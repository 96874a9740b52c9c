#pragma once

#include "tmpfp/complex.hpp"
#include "tmpfp/graph.hpp"
#include "tmpfp/homology.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tmpfp {

enum class FilterKind { Degree, Closeness, Betweenness, EdgeWeightSublevel, PowerGeodesic };
enum class Orientation { Sublevel, Superlevel };

struct FilterSpec {
    FilterKind kind = FilterKind::Degree;
    Orientation orientation = Orientation::Sublevel;

    friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

bool is_node_valued(FilterKind kind) noexcept;
std::string to_string(FilterKind kind);
std::string to_string(Orientation o);
FilterKind parse_filter_kind(std::string_view name);
Orientation parse_orientation(std::string_view name);

/// Thresholds α_1 < ... < α_m of one spatial filtration axis.
struct ThresholdGrid {
    std::vector<double> values;
    /// Resolution asked for; `values.size()` may be smaller after duplicate collapse.
    std::size_t requested = 0;
    std::string rule;

    std::size_t resolution() const noexcept { return values.size(); }
    friend bool operator==(const ThresholdGrid&, const ThresholdGrid&) = default;
};

/// Validates strict increase and builds a grid from explicit values.
ThresholdGrid explicit_grid(std::vector<double> values);

/// Degree is weighted degree. Closeness is (n-1)/sum of hop distances inside the
/// node's component of size n (0 when isolated). Betweenness is unnormalized
/// shortest-path betweenness with unit lengths, each unordered pair counted once.
std::map<NodeId, double> node_filter_values(const Snapshot& g, FilterKind kind);

/// α_j is the linearly interpolated empirical quantile at level j/m, duplicates
/// collapsed. Throws ValidationError on empty input or m = 0.
ThresholdGrid quantile_thresholds(std::span<const double> values, std::size_t m);

/// Pooled values a filter produces over all snapshots: node values for node
/// kinds, edge weights for EdgeWeightSublevel, finite pairwise geodesic
/// distances for PowerGeodesic. Orientation is not applied.
std::vector<double> filter_value_pool(const TemporalGraph& tg, FilterKind kind);

/// Weighted shortest-path distances between all reachable node pairs (u < v).
std::map<Edge, double> geodesic_distances(const Snapshot& g);

/// Clique complexes of the power graphs of `g` at each threshold: u and v are
/// joined iff their weighted geodesic distance is at most α_j.
std::vector<SimplicialComplex> power_filtration_sequence(const Snapshot& g, const ThresholdGrid& grid, int maxdim);

/// Grid of (level j, time t) subgraphs and their clique complexes.
///
/// `cell(j, t)` is monotone in j for fixed t. Indices are 1-based.
class Bifiltration {
public:
    Bifiltration(ThresholdGrid grid, FilterSpec filter, int maxdim,
                 std::vector<std::vector<Snapshot>> graphs,
                 std::vector<std::vector<SimplicialComplex>> cells);

    const ThresholdGrid& grid() const noexcept { return grid_; }
    const FilterSpec& filter() const noexcept { return filter_; }
    int maxdim() const noexcept { return maxdim_; }
    std::size_t levels() const noexcept { return cells_.size(); }
    std::size_t length() const noexcept { return cells_.empty() ? 0 : cells_.front().size(); }

    const Snapshot& graph(std::size_t j, std::size_t t) const;
    const SimplicialComplex& cell(std::size_t j, std::size_t t) const;
    /// Snapshot subgraphs of level j over time.
    const std::vector<Snapshot>& slice_graphs(std::size_t j) const;
    const std::vector<SimplicialComplex>& slice(std::size_t j) const;

private:
    ThresholdGrid grid_;
    FilterSpec filter_;
    int maxdim_;
    std::vector<std::vector<Snapshot>> graphs_;
    std::vector<std::vector<SimplicialComplex>> cells_;
};

/// Subgraph of `g` at level α for the given filter. Node kinds keep the nodes with
/// value ≤ α (≥ α for superlevel) and induce; edge kinds keep every node and the
/// edges whose weight (or geodesic distance) passes the threshold.
Snapshot filtered_subgraph(const Snapshot& g, const FilterSpec& filter, double alpha);

/// Builds every cell of the bifiltration. For superlevel orientation, level j
/// uses α_{m+1-j} so the cells still grow with j.
Bifiltration sublevel_bifiltration(const TemporalGraph& tg, const FilterSpec& filter,
                                   const ThresholdGrid& grid, int maxdim);

/// Level (1-based) at which a filter value first passes the grid, or 0 when it
/// never does. Superlevel level j uses α_{m+1-j}.
std::size_t entry_level(double value, const ThresholdGrid& grid, Orientation o);

/// Every simplex of the top-level cell of snapshot `g` with the first level at
/// which it appears, so that {σ : level <= j} is the clique complex of cell j.
std::vector<LeveledSimplex> entry_levels(const Snapshot& g, const FilterSpec& filter, const ThresholdGrid& grid,
                                         int maxdim);

}  // namespace tmpfp
