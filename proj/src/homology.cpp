#include "tmpfp/homology.hpp"

#include "tmpfp/error.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace tmpfp {

std::map<Simplex, std::size_t> index_of(const std::vector<Simplex>& simplices) {
    std::map<Simplex, std::size_t> idx;
    for (std::size_t i = 0; i < simplices.size(); ++i) idx.emplace(simplices[i], i);
    return idx;
}

std::vector<gf2::BitVector> boundary_columns(const std::vector<Simplex>& simplices,
                                             const std::map<Simplex, std::size_t>& faces) {
    std::vector<gf2::BitVector> cols;
    cols.reserve(simplices.size());
    for (const auto& s : simplices) {
        gf2::BitVector col(faces.size());
        if (s.size() > 1) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto it = faces.find(face);
                if (it == faces.end()) throw ContractViolation("complex is not face-closed");
                col.flip(it->second);
            }
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

std::size_t homology_dimension_oracle(const SimplicialComplex& c, int k) {
    if (k < 0) throw ContractViolation("homology dimension must be nonnegative");
    auto below = c.of_dimension(k - 1);
    auto here = c.of_dimension(k);
    auto above = c.of_dimension(k + 1);
    auto below_idx = index_of(below);
    auto here_idx = index_of(here);
    std::size_t rank_k = k == 0 ? 0 : gf2::rank(boundary_columns(here, below_idx), below.size());
    std::size_t rank_k1 = gf2::rank(boundary_columns(above, here_idx), here.size());
    return here.size() - rank_k - rank_k1;
}

namespace {

using Column = std::vector<std::uint32_t>;

void add_into(Column& target, const Column& source) {
    Column out;
    out.reserve(target.size() + source.size());
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(out));
    target.swap(out);
}

// Reduces boundary columns of a filtration given in order. Returns, per column,
// the row of its lowest one after reduction (npos when the column is zero).
std::vector<std::size_t> reduce_filtration(const std::vector<Simplex>& order) {
    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    const std::size_t n = order.size();
    std::map<Simplex, std::uint32_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos.emplace(order[i], static_cast<std::uint32_t>(i));

    std::size_t top = 0;
    for (const auto& s : order) top = std::max(top, s.size());

    std::vector<Column> cols(n);
    std::vector<std::size_t> low(n, npos);
    std::vector<std::size_t> owner(n, npos);  // row -> column with that lowest one
    std::vector<bool> cleared(n, false);

    // Highest dimension first so that paired columns can be skipped (clearing).
    for (std::size_t size = top; size >= 2; --size) {
        for (std::size_t j = 0; j < n; ++j) {
            if (order[j].size() != size || cleared[j]) continue;
            Column& col = cols[j];
            const Simplex& s = order[j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto it = pos.find(face);
                if (it == pos.end() || it->second >= j) throw ContractViolation("filtration is not face-closed");
                col.push_back(it->second);
            }
            std::sort(col.begin(), col.end());
            while (!col.empty() && owner[col.back()] != npos) add_into(col, cols[owner[col.back()]]);
            if (!col.empty()) {
                low[j] = col.back();
                owner[col.back()] = j;
                cleared[col.back()] = true;
            }
        }
    }
    return low;
}

}  // namespace

std::vector<std::size_t> betti_numbers(const SimplicialComplex& c) {
    const auto& order = c.simplices();
    auto low = reduce_filtration(order);
    std::vector<std::size_t> betti(static_cast<std::size_t>(c.maxdim()) + 1, 0);
    std::vector<bool> paired(order.size(), false);
    for (std::size_t j = 0; j < order.size(); ++j)
        if (low[j] != std::numeric_limits<std::size_t>::max()) paired[low[j]] = paired[j] = true;
    for (std::size_t j = 0; j < order.size(); ++j)
        if (!paired[j]) ++betti[order[j].size() - 1];
    return betti;
}

std::vector<std::vector<std::size_t>> betti_by_level(std::vector<LeveledSimplex> simplices, std::size_t levels,
                                                     int maxdim) {
    std::sort(simplices.begin(), simplices.end(), [](const LeveledSimplex& a, const LeveledSimplex& b) {
        if (a.level != b.level) return a.level < b.level;
        return SimplexOrder{}(a.simplex, b.simplex);
    });
    std::vector<Simplex> order;
    order.reserve(simplices.size());
    for (auto& s : simplices) {
        if (s.level < 1 || s.level > levels) throw ContractViolation("simplex level out of range");
        if (s.simplex.size() > static_cast<std::size_t>(maxdim) + 1)
            throw ContractViolation("simplex exceeds the complex dimension");
        order.push_back(s.simplex);
    }
    auto low = reduce_filtration(order);

    // diff[j][k] accumulates +1 at a birth level and -1 at a death level.
    std::vector<std::vector<long>> diff(levels + 1, std::vector<long>(static_cast<std::size_t>(maxdim) + 1, 0));
    std::vector<bool> negative(order.size(), false);
    for (std::size_t j = 0; j < order.size(); ++j)
        if (low[j] != std::numeric_limits<std::size_t>::max()) negative[j] = true;
    std::vector<bool> killed(order.size(), false);
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (!negative[j]) continue;
        std::size_t birth = low[j];
        killed[birth] = true;
        std::size_t k = order[birth].size() - 1;
        diff[simplices[birth].level - 1][k] += 1;
        diff[simplices[j].level - 1][k] -= 1;
    }
    // Positive simplices never killed are essential classes.
    for (std::size_t j = 0; j < order.size(); ++j)
        if (!negative[j] && !killed[j]) diff[simplices[j].level - 1][order[j].size() - 1] += 1;

    std::vector<std::vector<std::size_t>> out(levels, std::vector<std::size_t>(static_cast<std::size_t>(maxdim) + 1));
    std::vector<long> running(static_cast<std::size_t>(maxdim) + 1, 0);
    for (std::size_t j = 0; j < levels; ++j) {
        for (std::size_t k = 0; k < running.size(); ++k) {
            running[k] += diff[j][k];
            out[j][k] = static_cast<std::size_t>(running[k]);
        }
    }
    return out;
}

}  // namespace tmpfp
