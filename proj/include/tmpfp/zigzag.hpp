#pragma once

#include "tmpfp/complex.hpp"
#include "tmpfp/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tmpfp {

/// Position in the time-interleaved sequence. Odd s is snapshot t = (s+1)/2,
/// even s is the union between snapshots s/2 and s/2+1.
class ZigzagIndex {
public:
    explicit ZigzagIndex(std::uint32_t encoded);
    /// Inverse of time(); accepts t in {1, 1.5, 2, ...}.
    static ZigzagIndex from_time(double t);

    std::uint32_t encoded() const noexcept { return s_; }
    double time() const noexcept { return (static_cast<double>(s_) + 1.0) / 2.0; }
    bool is_snapshot() const noexcept { return s_ % 2 == 1; }

    friend auto operator<=>(const ZigzagIndex&, const ZigzagIndex&) = default;

private:
    std::uint32_t s_;
};

/// How the complex between two snapshots is built.
enum class UnionMode {
    /// Clique complex of the union graph.
    CliqueOfUnionGraph,
    /// Simplex-set union of the two neighboring clique complexes.
    SimplexUnion,
};

/// X_1 ⊆ X_2 ⊇ X_3 ⊆ ... of odd length 2T-1.
class ZigzagComplexSequence {
public:
    /// Validates the alternating inclusions. Throws ContractViolation otherwise.
    explicit ZigzagComplexSequence(std::vector<SimplicialComplex> complexes);

    std::size_t size() const noexcept { return complexes_.size(); }
    std::size_t snapshots() const noexcept { return (complexes_.size() + 1) / 2; }
    int maxdim() const noexcept { return complexes_.front().maxdim(); }
    /// 1-based encoded position.
    const SimplicialComplex& at(std::size_t s) const;
    const std::vector<SimplicialComplex>& complexes() const noexcept { return complexes_; }

    /// Same sequence read backwards in time.
    ZigzagComplexSequence reversed() const;

private:
    std::vector<SimplicialComplex> complexes_;
};

/// Sequence whose unions are simplex-set unions of neighboring complexes.
ZigzagComplexSequence build_zigzag_sequence(const std::vector<SimplicialComplex>& complexes_at_t);

/// Sequence of clique complexes of snapshot graphs, unions per `mode`.
ZigzagComplexSequence build_zigzag_sequence(const std::vector<Snapshot>& graphs, int maxdim,
                                            UnionMode mode = UnionMode::CliqueOfUnionGraph);

/// Closed interval [birth, death] of encoded indices.
struct ZigzagBar {
    std::uint32_t birth;
    std::uint32_t death;
    /// Alive at the final index of the sequence.
    bool right_open = false;

    friend auto operator<=>(const ZigzagBar&, const ZigzagBar&) = default;
};

/// Intervals of one homology dimension, sorted by (birth, death).
struct ZigzagDiagram {
    int dim = 0;
    /// Number of positions 2T-1 of the sequence it was computed from.
    std::uint32_t length = 0;
    std::vector<ZigzagBar> bars;

    void normalize();
    /// Number of bars containing encoded index s.
    std::size_t rank_at(std::uint32_t s) const;
    friend bool operator==(const ZigzagDiagram&, const ZigzagDiagram&) = default;
};

/// Interval decomposition of {H_k(X_s)}_s over GF(2). Requires 0 <= k < maxdim.
ZigzagDiagram zigzag_persistence(const ZigzagComplexSequence& seq, int k);

/// Diagrams for every k in 0..maxdim-1 from a single pass.
std::vector<ZigzagDiagram> zigzag_persistence_all(const ZigzagComplexSequence& seq);

/// True when every index s of the sequence has exactly dim H_k(X_s) bars
/// containing it, checked with homology_dimension_oracle.
bool satisfies_pointwise_identity(const ZigzagComplexSequence& seq, const ZigzagDiagram& pd);

}  // namespace tmpfp
