#include "tmpfp/zigzag_oracle.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/gf2.hpp"
#include "tmpfp/homology.hpp"

#include <map>
#include <set>
#include <vector>

namespace tmpfp {

namespace {

using gf2::BitVector;

// Chain-level data of one position, embedded in a shared k-chain coordinate system.
struct Position {
    std::vector<BitVector> cycles;
    std::vector<BitVector> boundaries;
};

class RankComputer {
public:
    RankComputer(const ZigzagComplexSequence& seq, int k) {
        std::set<Simplex, SimplexOrder> all_k;
        for (const auto& c : seq.complexes())
            for (auto& s : c.of_dimension(k)) all_k.insert(std::move(s));
        std::vector<Simplex> global(all_k.begin(), all_k.end());
        const auto global_idx = index_of(global);
        n_ = global.size();

        positions_.reserve(seq.size());
        for (const auto& c : seq.complexes()) {
            Position pos;
            auto here = c.of_dimension(k);
            auto below = c.of_dimension(k - 1);
            auto above = c.of_dimension(k + 1);

            auto embed = [&](const BitVector& local) {
                BitVector v(n_);
                for (std::size_t a = 0; a < here.size(); ++a)
                    if (local.get(a)) v.set(global_idx.at(here[a]));
                return v;
            };
            std::vector<BitVector> dk = k == 0 ? std::vector<BitVector>(here.size(), BitVector(0))
                                               : boundary_columns(here, index_of(below));
            std::size_t rows = k == 0 ? 0 : below.size();
            for (const auto& x : gf2::nullspace(dk, rows)) pos.cycles.push_back(embed(x));

            std::vector<BitVector> bd;
            for (const auto& col : boundary_columns(above, index_of(here))) bd.push_back(embed(col));
            pos.boundaries = gf2::independent_subset(bd, n_);
            positions_.push_back(std::move(pos));
        }
    }

    std::size_t rank(std::uint32_t i, std::uint32_t j) const {
        const std::size_t first = i - 1, last = j - 1;
        const std::size_t arrows = last - first;

        // Unknowns: coefficients on each position's cycle basis, then on the
        // boundary basis of the larger end of each arrow.
        std::vector<std::size_t> alpha_offset;
        std::size_t unknowns = 0;
        for (std::size_t s = first; s <= last; ++s) {
            alpha_offset.push_back(unknowns);
            unknowns += positions_[s].cycles.size();
        }
        std::vector<std::size_t> beta_offset;
        for (std::size_t e = 0; e < arrows; ++e) {
            beta_offset.push_back(unknowns);
            unknowns += positions_[big_end(first + e)].boundaries.size();
        }

        // One block of n_ equations per arrow: z_a + z_b + boundary = 0.
        const std::size_t eq = arrows * n_;
        std::vector<BitVector> columns(unknowns, BitVector(eq));
        auto place = [&](BitVector& col, std::size_t block, const BitVector& v) {
            for (std::size_t r = 0; r < n_; ++r)
                if (v.get(r)) col.flip(block * n_ + r);
        };
        for (std::size_t s = first; s <= last; ++s) {
            const auto& cyc = positions_[s].cycles;
            for (std::size_t a = 0; a < cyc.size(); ++a) {
                auto& col = columns[alpha_offset[s - first] + a];
                if (s > first) place(col, s - first - 1, cyc[a]);
                if (s < last) place(col, s - first, cyc[a]);
            }
        }
        for (std::size_t e = 0; e < arrows; ++e) {
            const auto& bd = positions_[big_end(first + e)].boundaries;
            for (std::size_t b = 0; b < bd.size(); ++b) place(columns[beta_offset[e] + b], e, bd[b]);
        }
        auto sections = gf2::nullspace(columns, eq);

        // Colimit: direct sum of cycle spaces modulo boundaries and the
        // identification of each smaller-end cycle with its image.
        const std::size_t width = (last - first + 1) * n_;
        auto lift = [&](std::size_t s, const BitVector& v) {
            BitVector out(width);
            for (std::size_t r = 0; r < n_; ++r)
                if (v.get(r)) out.set((s - first) * n_ + r);
            return out;
        };
        gf2::Basis relations(width);
        for (std::size_t s = first; s <= last; ++s)
            for (const auto& b : positions_[s].boundaries) relations.insert(lift(s, b));
        for (std::size_t e = 0; e < arrows; ++e) {
            std::size_t a = first + e, b = a + 1;
            std::size_t small = big_end(a) == a ? b : a;
            for (const auto& z : positions_[small].cycles) {
                BitVector v = lift(a, z);
                v ^= lift(b, z);
                relations.insert(std::move(v));
            }
        }
        const std::size_t base = relations.rank();
        const auto& cyc = positions_[first].cycles;
        for (const auto& x : sections) {
            BitVector z(n_);
            for (std::size_t a = 0; a < cyc.size(); ++a)
                if (x.get(alpha_offset[0] + a)) z ^= cyc[a];
            relations.insert(lift(first, z));
        }
        return relations.rank() - base;
    }

private:
    std::size_t n_ = 0;
    std::vector<Position> positions_;

    // Positions are 0-based here: even 0-based positions are snapshots, so the
    // union of the arrow between s and s+1 is whichever of them is odd.
    static std::size_t big_end(std::size_t s) { return s % 2 == 1 ? s : s + 1; }
};

}  // namespace

std::size_t generalized_rank_oracle(const ZigzagComplexSequence& seq, int k, std::uint32_t i, std::uint32_t j) {
    if (k < 0) throw ContractViolation("homology dimension must be nonnegative");
    if (i < 1 || i > j || j > seq.size()) throw ContractViolation("rank interval out of range");
    return RankComputer(seq, k).rank(i, j);
}

ZigzagDiagram interval_multiplicity_oracle(const ZigzagComplexSequence& seq, int k) {
    if (k < 0) throw ContractViolation("homology dimension must be nonnegative");
    RankComputer rc(seq, k);
    const auto n = static_cast<std::uint32_t>(seq.size());
    std::map<std::pair<std::uint32_t, std::uint32_t>, long> memo;
    auto rk = [&](std::uint32_t i, std::uint32_t j) -> long {
        if (i < 1 || j > n || i > j) return 0;
        auto [it, fresh] = memo.try_emplace({i, j}, 0);
        if (fresh) it->second = static_cast<long>(rc.rank(i, j));
        return it->second;
    };

    ZigzagDiagram pd;
    pd.dim = k;
    pd.length = n;
    for (std::uint32_t b = 1; b <= n; ++b) {
        for (std::uint32_t d = b; d <= n; ++d) {
            long mult = rk(b, d) - rk(b - 1, d) - rk(b, d + 1) + rk(b - 1, d + 1);
            if (mult < 0) throw ComputationError("negative interval multiplicity");
            for (long c = 0; c < mult; ++c) pd.bars.push_back({b, d, d == n});
        }
    }
    pd.normalize();
    return pd;
}

}  // namespace tmpfp
