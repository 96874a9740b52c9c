#pragma once

#include "tmpfp/filtration.hpp"
#include "tmpfp/graph.hpp"
#include "tmpfp/tensor.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace tmpfp {

/// Seeded evolving graph on nodes v000.. : snapshot 1 is G(N, density); at each
/// later step every node pair, with probability `churn`, redraws its presence
/// from Bernoulli(density) and, when present, a fresh weight in [0.5, 1.5).
TemporalGraph generate_synthetic(std::size_t N, std::size_t T, double churn, std::uint64_t seed,
                                 double density = 0.1);

struct BenchConfig {
    std::size_t nodes = 100;
    std::size_t snapshots = 50;
    std::size_t resolution = 20;
    double churn = 0.1;
    double density = 0.1;
    std::uint64_t seed = 1;
    FilterSpec filter;
    int maxdim = 2;
};

struct BenchResult {
    std::size_t nodes = 0;
    std::size_t snapshots = 0;
    std::size_t resolution = 0;
    double naive_seconds = 0.0;
    double tmp_seconds = 0.0;
    bool outputs_equal = false;

    double speedup() const noexcept { return tmp_seconds > 0.0 ? naive_seconds / tmp_seconds : 0.0; }
};

/// Fast-Betti tensors (one per k = 0..maxdim-1) built cell by cell: every
/// (level, time) cell recomputes filter values, subgraph, clique complex and
/// homology from scratch.
std::vector<TmpTensor> naive_fast_betti(const TemporalGraph& tg, const FilterSpec& filter, const ThresholdGrid& grid,
                                        int maxdim);

/// Same tensors from one leveled persistence pass per snapshot.
std::vector<TmpTensor> shared_fast_betti(const TemporalGraph& tg, const FilterSpec& filter, const ThresholdGrid& grid,
                                         int maxdim);

/// Times both arms on a synthetic dataset. Throws ComputationError when their
/// outputs differ.
BenchResult run_bench(const BenchConfig& config);

/// CSV table with header `nodes,snapshots,resolution,naive_seconds,tmp_seconds,speedup,outputs_equal`.
void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& results);

}  // namespace tmpfp
