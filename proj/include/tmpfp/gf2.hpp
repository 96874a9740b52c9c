#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tmpfp::gf2 {

/// Dense bit vector over GF(2).
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    bool any() const noexcept;
    /// Index of the highest set bit; size() when the vector is zero.
    std::size_t highest() const noexcept;
    BitVector& operator^=(const BitVector& other);

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incremental echelon basis. Each stored vector has a distinct highest bit.
class Basis {
public:
    explicit Basis(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    /// Reduces `v` against the basis in place; returns true when v becomes zero.
    bool reduce(BitVector& v) const;
    /// Adds `v` if independent. Returns true when the rank grew.
    bool insert(BitVector v);

private:
    struct Row {
        std::size_t pivot;
        BitVector v;
    };
    std::size_t dim_;
    std::vector<Row> rows_;
    std::vector<std::size_t> slot_;  // pivot -> index in rows_, or npos
    void rebuild_slots();
};

/// Rank of the span of `vectors`.
std::size_t rank(const std::vector<BitVector>& vectors, std::size_t dim);

/// Basis of {x : Σ x_c · columns[c] = 0}. Each result has size columns.size().
std::vector<BitVector> nullspace(const std::vector<BitVector>& columns, std::size_t dim);

/// Independent subset spanning the same space as `vectors`.
std::vector<BitVector> independent_subset(const std::vector<BitVector>& vectors, std::size_t dim);

}  // namespace tmpfp::gf2
