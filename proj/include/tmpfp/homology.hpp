#pragma once

#include "tmpfp/complex.hpp"
#include "tmpfp/gf2.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace tmpfp {

/// Boundary columns of `simplices` over the face index `faces` (GF(2)).
std::vector<gf2::BitVector> boundary_columns(const std::vector<Simplex>& simplices,
                                             const std::map<Simplex, std::size_t>& faces);

/// Position of every simplex in `simplices`.
std::map<Simplex, std::size_t> index_of(const std::vector<Simplex>& simplices);

/// dim H_k(c; GF(2)) by dense elimination: nullity(∂_k) - rank(∂_{k+1}).
std::size_t homology_dimension_oracle(const SimplicialComplex& c, int k);

/// Betti numbers β_0..β_maxdim by sparse column reduction.
std::vector<std::size_t> betti_numbers(const SimplicialComplex& c);

/// A simplex with the first filtration level (1-based) at which it appears.
struct LeveledSimplex {
    Simplex simplex;
    std::size_t level;
};

/// Betti numbers of every sublevel complex {σ : level(σ) <= j}, j = 1..levels,
/// from one persistence reduction. Result is indexed [j-1][k], k = 0..maxdim.
/// The input must be face-closed in the filtered sense (faces enter no later).
std::vector<std::vector<std::size_t>> betti_by_level(std::vector<LeveledSimplex> simplices, std::size_t levels,
                                                     int maxdim);

}  // namespace tmpfp
