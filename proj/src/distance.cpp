#include "tmpfp/distance.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/parallel.hpp"
#include "tmpfp/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace tmpfp {

double point_cost(const Bar& a, const Bar& b) noexcept {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_cost(const Bar& a) noexcept { return std::max(0.0, a.death - a.birth) / 2.0; }

std::vector<std::size_t> solve_assignment(const std::vector<std::vector<double>>& cost) {
    // Shortest augmenting path with potentials, 1-based with a virtual column 0.
    const std::size_t n = cost.size();
    for (const auto& row : cost)
        if (row.size() != n) throw ContractViolation("assignment matrix must be square");
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInfinity);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = kInfinity;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_to_col(n);
    for (std::size_t j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
    return row_to_col;
}

namespace {

// Augmented bipartite structure: rows are a's points then one diagonal slot per
// b point; columns are b's points then one diagonal slot per a point.
double augmented_cost(std::span<const Bar> a, std::span<const Bar> b, std::size_t r, std::size_t c) {
    const std::size_t n = a.size(), m = b.size();
    if (r < n && c < m) return point_cost(a[r], b[c]);
    if (r < n) return diagonal_cost(a[r]);
    if (c < m) return diagonal_cost(b[c]);
    return 0.0;
}

bool kuhn(std::size_t r, const std::vector<std::vector<std::size_t>>& adj, std::vector<std::size_t>& col_owner,
          std::vector<char>& seen) {
    for (auto c : adj[r]) {
        if (seen[c]) continue;
        seen[c] = 1;
        if (col_owner[c] == adj.size() || kuhn(col_owner[c], adj, col_owner, seen)) {
            col_owner[c] = r;
            return true;
        }
    }
    return false;
}

bool perfect_at(std::span<const Bar> a, std::span<const Bar> b, double threshold) {
    const std::size_t N = a.size() + b.size();
    std::vector<std::vector<std::size_t>> adj(N);
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c)
            if (augmented_cost(a, b, r, c) <= threshold) adj[r].push_back(c);
    std::vector<std::size_t> owner(N, N);
    std::vector<char> seen(N);
    for (std::size_t r = 0; r < N; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!kuhn(r, adj, owner, seen)) return false;
    }
    return true;
}

double bottleneck(std::span<const Bar> a, std::span<const Bar> b) {
    std::vector<double> candidates{0.0};
    for (const auto& x : a) candidates.push_back(diagonal_cost(x));
    for (const auto& y : b) candidates.push_back(diagonal_cost(y));
    for (const auto& x : a)
        for (const auto& y : b) candidates.push_back(point_cost(x, y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (perfect_at(a, b, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

}  // namespace

double wasserstein(std::span<const Bar> a, std::span<const Bar> b, double p) {
    if (!(p >= 1.0)) throw ContractViolation("Wasserstein order must be at least 1");
    if (a.empty() && b.empty()) return 0.0;
    if (std::isinf(p)) return bottleneck(a, b);
    const std::size_t N = a.size() + b.size();
    std::vector<std::vector<double>> cost(N, std::vector<double>(N));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) cost[r][c] = std::pow(augmented_cost(a, b, r, c), p);
    auto assignment = solve_assignment(cost);
    double total = 0.0;
    for (std::size_t r = 0; r < N; ++r) total += cost[r][assignment[r]];
    return std::pow(total, 1.0 / p);
}

double zpd_matching_distance(const std::vector<std::vector<Bar>>& g1, const std::vector<std::vector<Bar>>& g2,
                             double p) {
    if (g1.size() != g2.size()) throw ContractViolation("diagram grids differ in shape");
    std::vector<double> per(g1.size(), 0.0);
    parallel_for(g1.size(), [&](std::size_t j) { per[j] = wasserstein(g1[j], g2[j], p); });
    return per.empty() ? 0.0 : *std::max_element(per.begin(), per.end());
}

double tmp_distance(const TmpTensor& a, const TmpTensor& b, SliceMetric metric) {
    if (a.shape() != b.shape()) throw ContractViolation("tensor shapes differ");
    auto kind_of = [](const TmpTensor& t) {
        return t.metadata().is_object() && t.metadata().contains("vectorization")
                   ? t.metadata().at("vectorization").get<std::string>()
                   : std::string();
    };
    const std::string ka = kind_of(a), kb = kind_of(b);
    if (!ka.empty() && !kb.empty() && ka != kb) throw ContractViolation("tensors hold different vectorizations");
    if (metric == SliceMetric::Auto) metric = (ka == "image" || kb == "image") ? SliceMetric::L2 : SliceMetric::Sup;

    double worst = 0.0;
    for (std::size_t j = 0; j < a.shape()[0]; ++j) {
        auto sa = a.slice(j), sb = b.slice(j);
        double d = 0.0;
        for (std::size_t i = 0; i < sa.size(); ++i) {
            double diff = std::abs(sa[i] - sb[i]);
            d = metric == SliceMetric::Sup ? std::max(d, diff) : d + diff * diff;
        }
        if (metric == SliceMetric::L2) d = std::sqrt(d);
        worst = std::max(worst, d);
    }
    return worst;
}

namespace {

std::vector<std::vector<Bar>> dim_grid(const Fingerprint& fp, int k) {
    std::vector<std::vector<Bar>> out;
    out.reserve(fp.diagrams.size());
    for (const auto& slice : fp.diagrams) out.push_back(to_time_bars(slice.at(static_cast<std::size_t>(k))));
    return out;
}

TmpTensor custom_tensor(const std::vector<std::vector<Bar>>& grid, const CustomVectorizer& f, std::size_t T) {
    std::vector<SliceVector> slices;
    for (const auto& bars : grid) {
        SliceVector s;
        s.values = f(bars, T);
        s.shape = {static_cast<std::uint32_t>(s.values.size())};
        slices.push_back(std::move(s));
    }
    return assemble_tmp(slices);
}

}  // namespace

StabilityReport stability_check(const TemporalGraph& base, const std::vector<TemporalGraph>& perturbations,
                                const PipelineConfig& config, double constant, double p,
                                const CustomVectorizer& custom, double tolerance) {
    StabilityReport report;
    report.constant = constant;
    report.p = p;
    report.vectorization = custom ? "custom" : to_string(config.vectorization);

    const Fingerprint fb = fingerprint(base, config, std::nullopt, true);
    FingerprintFrame frame{fb.grid, fb.bounds.empty() ? std::nullopt : std::optional(fb.bounds)};
    for (const auto& h : perturbations) {
        if (h.length() != base.length()) throw ValidationError("perturbation has a different number of snapshots");
        const Fingerprint fh = fingerprint(h, config, frame, true);
        double lhs = 0.0, rhs = 0.0;
        for (std::size_t d = 0; d < config.dims.size(); ++d) {
            const int k = config.dims[d];
            auto gb = dim_grid(fb, k), gh = dim_grid(fh, k);
            rhs = std::max(rhs, zpd_matching_distance(gb, gh, p));
            if (custom) {
                lhs = std::max(lhs, tmp_distance(custom_tensor(gb, custom, base.length()),
                                                 custom_tensor(gh, custom, base.length()), config.slice_metric));
            } else {
                lhs = std::max(lhs, tmp_distance(fb.tensors[d], fh.tensors[d], config.slice_metric));
            }
        }
        StabilityPair pair{lhs, rhs, rhs > 0.0 ? lhs / rhs : std::nan(""), false};
        pair.violation = lhs > constant * rhs + tolerance;
        if (pair.violation) ++report.violations;
        if (rhs > 0.0) report.max_ratio = std::max(report.max_ratio, pair.ratio);
        report.pairs.push_back(pair);
    }
    return report;
}

}  // namespace tmpfp
