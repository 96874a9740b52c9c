#include "tmpfp/complex.hpp"

#include "tmpfp/error.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace tmpfp {

SimplicialComplex::SimplicialComplex(int maxdim) : maxdim_(maxdim) {
    if (maxdim < 0) throw ContractViolation("maxdim must be nonnegative");
}

SimplicialComplex SimplicialComplex::closure_of(std::vector<Simplex> simplices, int maxdim) {
    SimplicialComplex out(maxdim);
    std::set<Simplex, SimplexOrder> all;
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) continue;
        if (s.size() > static_cast<std::size_t>(maxdim) + 1)
            throw ContractViolation("simplex exceeds the complex dimension");
        const std::size_t n = s.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }
    out.simplices_.assign(all.begin(), all.end());
    return out;
}

std::size_t SimplicialComplex::count(int dim) const {
    return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(), [dim](const Simplex& s) {
        return static_cast<int>(s.size()) == dim + 1;
    }));
}

std::vector<Simplex> SimplicialComplex::of_dimension(int dim) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == dim + 1) out.push_back(s);
    return out;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s, SimplexOrder{});
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    return std::includes(other.simplices_.begin(), other.simplices_.end(), simplices_.begin(), simplices_.end(),
                         SimplexOrder{});
}

bool SimplicialComplex::is_face_closed() const {
    for (const auto& s : simplices_) {
        if (s.size() < 2) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            if (!contains(face)) return false;
        }
    }
    return true;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

SimplicialComplex simplex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex out(std::max(a.maxdim(), b.maxdim()));
    out.simplices_.reserve(a.size() + b.size());
    std::set_union(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(), b.simplices_.end(),
                   std::back_inserter(out.simplices_), SimplexOrder{});
    return out;
}

std::vector<Simplex> simplex_difference(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> out;
    std::set_difference(a.simplices().begin(), a.simplices().end(), b.simplices().begin(), b.simplices().end(),
                        std::back_inserter(out), SimplexOrder{});
    return out;
}

SimplicialComplex clique_complex(const Snapshot& g, int maxdim) {
    if (maxdim < 1) throw ContractViolation("clique complex needs maxdim >= 1");
    SimplicialComplex out(maxdim);

    // Local indices follow label order, so index tuples sort like label tuples.
    std::vector<NodeId> labels(g.nodes().begin(), g.nodes().end());
    auto index_of = [&](const NodeId& n) {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), n) - labels.begin());
    };
    std::vector<std::vector<std::size_t>> higher(labels.size());
    for (const auto& [e, w] : g.edges()) higher[index_of(e.u)].push_back(index_of(e.v));
    for (auto& h : higher) std::sort(h.begin(), h.end());

    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> clique;
    // Extends `clique` by candidates adjacent to all members and larger than its last vertex.
    auto extend = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
        found.push_back(clique);
        if (clique.size() == static_cast<std::size_t>(maxdim) + 1) return;
        for (std::size_t c : candidates) {
            std::vector<std::size_t> next;
            std::set_intersection(candidates.begin(), candidates.end(), higher[c].begin(), higher[c].end(),
                                  std::back_inserter(next));
            clique.push_back(c);
            self(self, next);
            clique.pop_back();
        }
    };
    for (std::size_t v = 0; v < labels.size(); ++v) {
        clique.assign(1, v);
        extend(extend, higher[v]);
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.simplices_.reserve(found.size());
    for (const auto& f : found) {
        Simplex s;
        s.reserve(f.size());
        for (std::size_t i : f) s.push_back(labels[i]);
        out.simplices_.push_back(std::move(s));
    }
    return out;
}

}  // namespace tmpfp
