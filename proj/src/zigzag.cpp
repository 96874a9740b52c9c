#include "tmpfp/zigzag.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/homology.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <unordered_map>

namespace tmpfp {

ZigzagIndex::ZigzagIndex(std::uint32_t encoded) : s_(encoded) {
    if (encoded < 1) throw ContractViolation("zigzag index starts at 1");
}

ZigzagIndex ZigzagIndex::from_time(double t) {
    double s = 2.0 * t - 1.0;
    if (!(s >= 1.0) || s != std::floor(s) || s > 4294967295.0)
        throw ContractViolation("time is not on the zigzag index set");
    return ZigzagIndex(static_cast<std::uint32_t>(s));
}

ZigzagComplexSequence::ZigzagComplexSequence(std::vector<SimplicialComplex> complexes)
    : complexes_(std::move(complexes)) {
    if (complexes_.empty() || complexes_.size() % 2 == 0)
        throw ContractViolation("zigzag sequence must have odd positive length");
    for (const auto& c : complexes_)
        if (c.maxdim() != complexes_.front().maxdim()) throw ContractViolation("complexes differ in maxdim");
    for (std::size_t i = 1; i < complexes_.size(); i += 2) {
        if (!complexes_[i - 1].is_subcomplex_of(complexes_[i]) || !complexes_[i + 1].is_subcomplex_of(complexes_[i]))
            throw ContractViolation("union position does not contain its neighbors");
    }
}

const SimplicialComplex& ZigzagComplexSequence::at(std::size_t s) const {
    if (s < 1 || s > complexes_.size()) throw ContractViolation("zigzag position out of range");
    return complexes_[s - 1];
}

ZigzagComplexSequence ZigzagComplexSequence::reversed() const {
    return ZigzagComplexSequence(std::vector<SimplicialComplex>(complexes_.rbegin(), complexes_.rend()));
}

ZigzagComplexSequence build_zigzag_sequence(const std::vector<SimplicialComplex>& complexes_at_t) {
    if (complexes_at_t.empty()) throw ValidationError("zigzag sequence needs at least one complex");
    std::vector<SimplicialComplex> seq;
    seq.reserve(2 * complexes_at_t.size() - 1);
    for (std::size_t t = 0; t < complexes_at_t.size(); ++t) {
        if (t > 0) seq.push_back(simplex_union(complexes_at_t[t - 1], complexes_at_t[t]));
        seq.push_back(complexes_at_t[t]);
    }
    return ZigzagComplexSequence(std::move(seq));
}

ZigzagComplexSequence build_zigzag_sequence(const std::vector<Snapshot>& graphs, int maxdim, UnionMode mode) {
    if (graphs.empty()) throw ValidationError("zigzag sequence needs at least one snapshot");
    std::vector<SimplicialComplex> at_t;
    at_t.reserve(graphs.size());
    for (const auto& g : graphs) at_t.push_back(clique_complex(g, maxdim));
    if (mode == UnionMode::SimplexUnion) return build_zigzag_sequence(at_t);

    std::vector<SimplicialComplex> seq;
    seq.reserve(2 * graphs.size() - 1);
    for (std::size_t t = 0; t < graphs.size(); ++t) {
        if (t > 0) seq.push_back(clique_complex(union_graph(graphs[t - 1], graphs[t]), maxdim));
        seq.push_back(std::move(at_t[t]));
    }
    return ZigzagComplexSequence(std::move(seq));
}

void ZigzagDiagram::normalize() { std::sort(bars.begin(), bars.end()); }

std::size_t ZigzagDiagram::rank_at(std::uint32_t s) const {
    return static_cast<std::size_t>(
        std::count_if(bars.begin(), bars.end(), [s](const ZigzagBar& b) { return b.birth <= s && s <= b.death; }));
}

namespace {

using Chain = std::vector<std::uint32_t>;

void add_into(Chain& target, const Chain& source) {
    Chain out;
    out.reserve(target.size() + source.size());
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(out));
    target.swap(out);
}

bool holds(const Chain& c, std::uint32_t id) { return std::binary_search(c.begin(), c.end(), id); }

struct Op {
    Simplex simplex;
    bool insertion;
};

struct FineBar {
    int dim;
    std::size_t birth;
    std::size_t death;
};

// Maintains a cycle basis with unique pivots for each dimension while simplices
// are added and removed. Every column is either a cycle carrying the index at
// which its class was born, or a boundary together with a chain it bounds.
class Engine {
public:
    Engine(int maxdim, const std::vector<Op>& ops) : ops_(ops), dims_(static_cast<std::size_t>(maxdim) + 1) {}

    std::vector<FineBar> run() {
        for (std::size_t i = 0; i < ops_.size(); ++i) {
            if (ops_[i].insertion)
                insert(i, ops_[i].simplex);
            else
                remove(i, ops_[i].simplex);
        }
        for (std::size_t p = 0; p < dims_.size(); ++p)
            for (const auto& c : dims_[p].cols)
                if (c.alive && !c.boundary) bars_.push_back({static_cast<int>(p), c.birth, ops_.size()});
        return std::move(bars_);
    }

private:
    struct Column {
        Chain z;
        Chain chain;
        std::size_t birth = 0;
        bool boundary = false;
        bool alive = true;
    };
    struct Dim {
        std::vector<Column> cols;
        std::unordered_map<std::uint32_t, std::size_t> pivot;
    };

    const std::vector<Op>& ops_;
    std::vector<Dim> dims_;
    std::map<Simplex, std::uint32_t> ids_;
    std::uint32_t next_id_ = 0;
    std::vector<FineBar> bars_;

    // Order in which classes are allowed to absorb each other: a class may be
    // added into any class that comes after it.
    bool precedes(std::size_t a, std::size_t b) const {
        if (a < b) return ops_[b - 1].insertion;
        if (a > b) return !ops_[a - 1].insertion;
        return false;
    }

    Chain boundary_ids(const Simplex& s) const {
        Chain out;
        out.reserve(s.size());
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) face.push_back(s[i]);
            auto it = ids_.find(face);
            if (it == ids_.end()) throw ComputationError("face inserted after its coface");
            out.push_back(it->second);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::uint32_t pivot_of(const Column& c) {
        if (c.z.empty()) throw ComputationError("cycle basis column vanished");
        return c.z.back();
    }

    // Registers the pivot of the unregistered column `a`, resolving clashes by
    // column additions that keep every class representative valid.
    void settle(Dim& d, std::size_t a) {
        for (;;) {
            std::uint32_t piv = pivot_of(d.cols[a]);
            auto it = d.pivot.find(piv);
            if (it == d.pivot.end() || it->second == a) {
                d.pivot[piv] = a;
                return;
            }
            std::size_t b = it->second;
            Column& A = d.cols[a];
            Column& B = d.cols[b];
            bool absorb_into_b;
            if (A.boundary && B.boundary) {
                absorb_into_b = false;
            } else if (A.boundary != B.boundary) {
                absorb_into_b = A.boundary;
            } else {
                absorb_into_b = precedes(A.birth, B.birth);
            }
            if (absorb_into_b) {
                add_into(B.z, A.z);
                if (B.boundary) add_into(B.chain, A.chain);
                d.pivot[piv] = a;
                a = b;
            } else {
                add_into(A.z, B.z);
                if (A.boundary) add_into(A.chain, B.chain);
            }
        }
    }

    void insert(std::size_t i, const Simplex& s) {
        const std::size_t p = s.size() - 1;
        if (p >= dims_.size()) throw ContractViolation("simplex exceeds the complex dimension");
        if (ids_.contains(s)) throw ComputationError("simplex inserted twice");
        const std::uint32_t id = next_id_++;

        if (p == 0) {
            ids_.emplace(s, id);
            Dim& d = dims_[0];
            d.cols.push_back({Chain{id}, {}, i + 1, false, true});
            d.pivot[id] = d.cols.size() - 1;
            return;
        }

        Chain bd = boundary_ids(s);
        ids_.emplace(s, id);
        Dim& low = dims_[p - 1];
        std::vector<std::size_t> used;
        Chain rest = bd;
        while (!rest.empty()) {
            auto it = low.pivot.find(rest.back());
            if (it == low.pivot.end()) throw ComputationError("boundary is not in the cycle span");
            add_into(rest, low.cols[it->second].z);
            used.push_back(it->second);
        }

        std::size_t victim = low.cols.size();
        for (auto l : used) {
            if (low.cols[l].boundary) continue;
            if (victim == low.cols.size() || precedes(low.cols[victim].birth, low.cols[l].birth)) victim = l;
        }

        if (victim == low.cols.size()) {
            Chain z{id};
            for (auto l : used) add_into(z, low.cols[l].chain);
            Dim& d = dims_[p];
            d.cols.push_back({std::move(z), {}, i + 1, false, true});
            settle(d, d.cols.size() - 1);
            return;
        }

        Column& v = low.cols[victim];
        bars_.push_back({static_cast<int>(p - 1), v.birth, i});
        low.pivot.erase(pivot_of(v));
        v.z = std::move(bd);
        v.chain = Chain{id};
        v.boundary = true;
        settle(low, victim);
    }

    void remove(std::size_t i, const Simplex& s) {
        const std::size_t p = s.size() - 1;
        auto found = ids_.find(s);
        if (found == ids_.end()) throw ComputationError("removing a simplex that is not present");
        const std::uint32_t id = found->second;
        ids_.erase(found);
        Dim& d = dims_[p];

        std::vector<std::size_t> cycles;
        for (std::size_t c = 0; c < d.cols.size(); ++c)
            if (d.cols[c].alive && holds(d.cols[c].z, id)) cycles.push_back(c);

        if (cycles.empty()) {
            if (p == 0) throw ComputationError("vertex missing from the cycle basis");
            Dim& low = dims_[p - 1];
            std::vector<std::size_t> owners;
            for (std::size_t c = 0; c < low.cols.size(); ++c)
                if (low.cols[c].alive && low.cols[c].boundary && holds(low.cols[c].chain, id)) owners.push_back(c);
            if (owners.empty()) throw ComputationError("simplex is in no cycle and no chain");
            std::size_t alpha = *std::min_element(owners.begin(), owners.end(), [&](std::size_t a, std::size_t b) {
                return pivot_of(low.cols[a]) < pivot_of(low.cols[b]);
            });
            for (auto b : owners) {
                if (b == alpha) continue;
                add_into(low.cols[b].z, low.cols[alpha].z);
                add_into(low.cols[b].chain, low.cols[alpha].chain);
            }
            Column& a = low.cols[alpha];
            a.boundary = false;
            a.chain.clear();
            a.birth = i + 1;
            return;
        }

        for (auto c : cycles)
            if (d.cols[c].boundary) throw ComputationError("boundary column holds a simplex without cofaces");

        if (p > 0) {
            const Chain z = d.cols[cycles.front()].z;
            for (auto& c : dims_[p - 1].cols)
                if (c.alive && c.boundary && holds(c.chain, id)) add_into(c.chain, z);
        }

        std::sort(cycles.begin(), cycles.end(),
                  [&](std::size_t a, std::size_t b) { return precedes(d.cols[a].birth, d.cols[b].birth); });
        const std::size_t cur = cycles.front();
        for (std::size_t k = 1; k < cycles.size(); ++k) {
            Column& x = d.cols[cycles[k]];
            Column& c = d.cols[cur];
            if (pivot_of(c) < pivot_of(x)) {
                add_into(x.z, c.z);
            } else {
                Chain old = x.z;
                add_into(x.z, c.z);
                c.z = std::move(old);
                d.pivot[pivot_of(x)] = cycles[k];
                d.pivot[pivot_of(c)] = cur;
            }
        }
        Column& dead = d.cols[cur];
        bars_.push_back({static_cast<int>(p), dead.birth, i});
        d.pivot.erase(pivot_of(dead));
        dead.alive = false;
        dead.z.clear();
    }
};

}  // namespace

std::vector<ZigzagDiagram> zigzag_persistence_all(const ZigzagComplexSequence& seq) {
    const auto& xs = seq.complexes();
    std::vector<Op> ops;
    std::vector<std::size_t> checkpoint;
    checkpoint.reserve(xs.size());
    for (const auto& s : xs.front().simplices()) ops.push_back({s, true});
    checkpoint.push_back(ops.size());
    for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
        if (s % 2 == 0) {
            for (auto& sim : simplex_difference(xs[s + 1], xs[s])) ops.push_back({std::move(sim), true});
        } else {
            auto gone = simplex_difference(xs[s], xs[s + 1]);
            for (auto it = gone.rbegin(); it != gone.rend(); ++it) ops.push_back({std::move(*it), false});
        }
        checkpoint.push_back(ops.size());
    }

    const int maxdim = seq.maxdim();
    auto fine = Engine(maxdim, ops).run();

    const auto length = static_cast<std::uint32_t>(xs.size());
    std::vector<ZigzagDiagram> out(static_cast<std::size_t>(std::max(maxdim, 0)));
    for (int k = 0; k < maxdim; ++k) {
        out[static_cast<std::size_t>(k)].dim = k;
        out[static_cast<std::size_t>(k)].length = length;
    }
    // Keep the positions whose fine index falls inside the fine bar.
    for (const auto& b : fine) {
        if (b.dim >= maxdim) continue;
        auto lo = std::lower_bound(checkpoint.begin(), checkpoint.end(), b.birth);
        auto hi = std::upper_bound(checkpoint.begin(), checkpoint.end(), b.death);
        if (lo >= hi) continue;
        auto birth = static_cast<std::uint32_t>(lo - checkpoint.begin()) + 1;
        auto death = static_cast<std::uint32_t>(hi - checkpoint.begin());
        out[static_cast<std::size_t>(b.dim)].bars.push_back({birth, death, death == length});
    }
    for (auto& pd : out) pd.normalize();
    return out;
}

ZigzagDiagram zigzag_persistence(const ZigzagComplexSequence& seq, int k) {
    if (k < 0 || k >= seq.maxdim()) throw ContractViolation("homology dimension out of range for this sequence");
    return zigzag_persistence_all(seq)[static_cast<std::size_t>(k)];
}

bool satisfies_pointwise_identity(const ZigzagComplexSequence& seq, const ZigzagDiagram& pd) {
    if (pd.length != seq.size()) return false;
    for (std::uint32_t s = 1; s <= pd.length; ++s)
        if (pd.rank_at(s) != homology_dimension_oracle(seq.at(s), pd.dim)) return false;
    return true;
}

}  // namespace tmpfp
