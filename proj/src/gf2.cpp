#include "tmpfp/gf2.hpp"

#include "tmpfp/error.hpp"

#include <bit>
#include <limits>

namespace tmpfp::gf2 {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

bool BitVector::any() const noexcept {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::highest() const noexcept {
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    return size_;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw ContractViolation("bit vector sizes differ");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

void Basis::rebuild_slots() {
    slot_.assign(dim_, npos);
    for (std::size_t i = 0; i < rows_.size(); ++i) slot_[rows_[i].pivot] = i;
}

bool Basis::reduce(BitVector& v) const {
    if (v.size() != dim_) throw ContractViolation("vector does not match basis dimension");
    for (std::size_t h = v.highest(); h != v.size(); h = v.highest()) {
        if (slot_.empty() || slot_[h] == npos) return false;
        v ^= rows_[slot_[h]].v;
    }
    return true;
}

bool Basis::insert(BitVector v) {
    if (slot_.size() != dim_) rebuild_slots();
    if (reduce(v)) return false;
    std::size_t p = v.highest();
    slot_[p] = rows_.size();
    rows_.push_back({p, std::move(v)});
    return true;
}

std::size_t rank(const std::vector<BitVector>& vectors, std::size_t dim) {
    Basis b(dim);
    for (const auto& v : vectors) b.insert(v);
    return b.rank();
}

std::vector<BitVector> independent_subset(const std::vector<BitVector>& vectors, std::size_t dim) {
    Basis b(dim);
    std::vector<BitVector> out;
    for (const auto& v : vectors)
        if (b.insert(v)) out.push_back(v);
    return out;
}

std::vector<BitVector> nullspace(const std::vector<BitVector>& columns, std::size_t dim) {
    // Eliminate on [column | unit combination]; columns that vanish yield kernel vectors.
    const std::size_t n = columns.size();
    std::vector<BitVector> pivot_value(dim);
    std::vector<BitVector> pivot_combo(dim);
    std::vector<bool> used(dim, false);
    std::vector<BitVector> kernel;
    for (std::size_t c = 0; c < n; ++c) {
        BitVector v = columns[c];
        if (v.size() != dim) throw ContractViolation("column does not match ambient dimension");
        BitVector combo(n);
        combo.set(c);
        for (std::size_t h = v.highest(); h != dim; h = v.highest()) {
            if (!used[h]) break;
            v ^= pivot_value[h];
            combo ^= pivot_combo[h];
        }
        std::size_t h = v.highest();
        if (h == dim) {
            kernel.push_back(std::move(combo));
        } else {
            used[h] = true;
            pivot_value[h] = std::move(v);
            pivot_combo[h] = std::move(combo);
        }
    }
    return kernel;
}

}  // namespace tmpfp::gf2
