#include "tmpfp/bench.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/homology.hpp"
#include "tmpfp/io.hpp"
#include "tmpfp/parallel.hpp"
#include "tmpfp/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

namespace tmpfp {

TemporalGraph generate_synthetic(std::size_t N, std::size_t T, double churn, std::uint64_t seed, double density) {
    if (N < 1 || T < 1) throw ValidationError("synthetic graphs need N >= 1 and T >= 1");
    if (!(churn >= 0.0 && churn <= 1.0)) throw ValidationError("churn must lie in [0, 1]");
    if (!(density >= 0.0 && density <= 1.0)) throw ValidationError("density must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> weight(0.5, 1.5);

    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < N; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "v%03zu", i);
        nodes.emplace_back(buf);
    }
    // Current weight of each pair, 0 when absent.
    std::vector<double> state(N * (N - 1) / 2, 0.0);
    for (auto& w : state)
        if (unit(rng) < density) w = weight(rng);

    std::vector<Snapshot> snaps;
    for (std::size_t t = 0; t < T; ++t) {
        if (t > 0) {
            for (auto& w : state) {
                if (unit(rng) < churn) w = unit(rng) < density ? weight(rng) : 0.0;
            }
        }
        Snapshot s;
        for (const auto& n : nodes) s.add_node(n);
        std::size_t p = 0;
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = a + 1; b < N; ++b, ++p)
                if (state[p] > 0.0) s.set_edge(nodes[a], nodes[b], state[p]);
        snaps.push_back(std::move(s));
    }
    return TemporalGraph(std::move(snaps));
}

namespace {

std::vector<TmpTensor> to_tensors(const std::vector<std::vector<std::vector<std::size_t>>>& table, std::size_t m,
                                  std::size_t T, int maxdim) {
    std::vector<TmpTensor> out;
    for (int k = 0; k < maxdim; ++k) {
        std::vector<double> data(m * T);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t t = 0; t < T; ++t)
                data[j * T + t] = static_cast<double>(table[t][j][static_cast<std::size_t>(k)]);
        out.emplace_back(std::vector<std::uint32_t>{static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(T)},
                         std::move(data), nlohmann::json{{"vectorization", "betti-fast"}, {"homology_dim", k}});
    }
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<TmpTensor> naive_fast_betti(const TemporalGraph& tg, const FilterSpec& filter, const ThresholdGrid& grid,
                                        int maxdim) {
    const std::size_t m = grid.resolution(), T = tg.length();
    std::vector<std::vector<std::vector<std::size_t>>> table(T, std::vector<std::vector<std::size_t>>(m));
    parallel_for(m * T, [&](std::size_t cell) {
        const std::size_t j = cell / T, t = cell % T;
        const double alpha =
            filter.orientation == Orientation::Sublevel ? grid.values[j] : grid.values[m - 1 - j];
        auto g = filtered_subgraph(tg.snapshots()[t], filter, alpha);
        table[t][j] = betti_numbers(clique_complex(g, maxdim));
    });
    return to_tensors(table, m, T, maxdim);
}

std::vector<TmpTensor> shared_fast_betti(const TemporalGraph& tg, const FilterSpec& filter, const ThresholdGrid& grid,
                                         int maxdim) {
    return to_tensors(fast_betti_table(tg, filter, grid, maxdim), grid.resolution(), tg.length(), maxdim);
}

BenchResult run_bench(const BenchConfig& config) {
    auto tg = generate_synthetic(config.nodes, config.snapshots, config.churn, config.seed, config.density);
    auto pool = filter_value_pool(tg, config.filter.kind);
    if (pool.empty()) throw ValidationError("synthetic graph produced no filter values");
    auto grid = quantile_thresholds(pool, config.resolution);

    BenchResult r;
    r.nodes = config.nodes;
    r.snapshots = config.snapshots;
    r.resolution = grid.resolution();

    auto start = std::chrono::steady_clock::now();
    auto naive = naive_fast_betti(tg, config.filter, grid, config.maxdim);
    r.naive_seconds = seconds_since(start);

    start = std::chrono::steady_clock::now();
    auto shared = shared_fast_betti(tg, config.filter, grid, config.maxdim);
    r.tmp_seconds = seconds_since(start);

    r.outputs_equal = naive == shared;
    if (!r.outputs_equal) throw ComputationError("naive and shared fast-Betti tensors differ");
    return r;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& results) {
    out << "nodes,snapshots,resolution,naive_seconds,tmp_seconds,speedup,outputs_equal\n";
    for (const auto& r : results)
        out << r.nodes << ',' << r.snapshots << ',' << r.resolution << ',' << format_real(r.naive_seconds) << ','
            << format_real(r.tmp_seconds) << ',' << format_real(r.speedup()) << ',' << (r.outputs_equal ? 1 : 0)
            << '\n';
}

}  // namespace tmpfp
