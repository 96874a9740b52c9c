#pragma once

#include "tmpfp/graph.hpp"

#include <cstddef>
#include <vector>

namespace tmpfp {

/// A simplex as its sorted vertex list.
using Simplex = std::vector<NodeId>;

/// Deterministic simplex order: dimension first, then lexicographic labels.
struct SimplexOrder {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Finite face-closed set of simplices of dimension at most `maxdim`.
///
/// Simplices are kept sorted by SimplexOrder, so set operations are linear merges
/// and two complexes with the same simplices compare equal.
class SimplicialComplex {
public:
    explicit SimplicialComplex(int maxdim = 2);

    /// Builds a complex from arbitrary simplices, adding all their faces.
    /// Simplices with more than maxdim+1 vertices are rejected.
    static SimplicialComplex closure_of(std::vector<Simplex> simplices, int maxdim);

    int maxdim() const noexcept { return maxdim_; }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    bool empty() const noexcept { return simplices_.empty(); }

    /// Number of simplices of dimension `dim`.
    std::size_t count(int dim) const;
    /// Simplices of dimension `dim`, in order.
    std::vector<Simplex> of_dimension(int dim) const;
    bool contains(const Simplex& s) const;
    bool is_subcomplex_of(const SimplicialComplex& other) const;
    bool is_face_closed() const;
    long euler_characteristic() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    friend SimplicialComplex simplex_union(const SimplicialComplex&, const SimplicialComplex&);
    friend SimplicialComplex clique_complex(const Snapshot&, int);

    int maxdim_;
    std::vector<Simplex> simplices_;
};

/// Simplex-set union. The result's maxdim is the larger of the two.
SimplicialComplex simplex_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// All cliques of `g` with at most maxdim+1 vertices. maxdim >= 1.
SimplicialComplex clique_complex(const Snapshot& g, int maxdim);

/// Simplices of `a` not in `b`, in simplex order.
std::vector<Simplex> simplex_difference(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace tmpfp
