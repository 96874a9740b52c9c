#pragma once

#include "tmpfp/zigzag.hpp"

#include <cstddef>
#include <cstdint>

namespace tmpfp {

/// Rank of the map from the limit to the colimit of {H_k(X_s)} restricted to
/// positions i..j, by dense GF(2) algebra on chains. Equals the number of
/// interval summands whose support contains [i, j]. 1 <= i <= j <= size.
std::size_t generalized_rank_oracle(const ZigzagComplexSequence& seq, int k, std::uint32_t i, std::uint32_t j);

/// Interval multiplicities by inclusion-exclusion over generalized ranks.
/// Throws ComputationError if any multiplicity comes out negative.
ZigzagDiagram interval_multiplicity_oracle(const ZigzagComplexSequence& seq, int k);

}  // namespace tmpfp
