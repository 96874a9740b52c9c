#include "support/testkit.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/zigzag.hpp"
#include "tmpfp/zigzag_oracle.hpp"

#include <doctest.h>

using namespace tmpfp;
using testkit::make_graph;

namespace {

SimplicialComplex vertex(const char* label) { return SimplicialComplex::closure_of({{NodeId(label)}}, 2); }

SimplicialComplex edge(const char* a, const char* b) {
    return SimplicialComplex::closure_of({{NodeId(a), NodeId(b)}}, 2);
}

std::vector<ZigzagBar> bars_of(const ZigzagDiagram& pd) { return pd.bars; }

}  // namespace

TEST_CASE("zigzag index encodes snapshot and union times") {
    for (std::uint32_t s = 1; s <= 40; ++s) {
        ZigzagIndex idx(s);
        CHECK(ZigzagIndex::from_time(idx.time()) == idx);
        CHECK(idx.is_snapshot() == (s % 2 == 1));
    }
    CHECK(ZigzagIndex(3).time() == 2.0);
    CHECK(ZigzagIndex(4).time() == 2.5);
    CHECK_THROWS_AS(ZigzagIndex(0), ContractViolation);
    CHECK_THROWS_AS(ZigzagIndex::from_time(1.25), ContractViolation);
}

TEST_CASE("sequence construction") {
    auto one = build_zigzag_sequence(std::vector<SimplicialComplex>{edge("a", "b")});
    CHECK(one.size() == 1);
    CHECK(one.snapshots() == 1);

    auto k = edge("a", "b");
    auto constant = build_zigzag_sequence(std::vector<SimplicialComplex>{k, k});
    CHECK(constant.complexes() == std::vector<SimplicialComplex>{k, k, k});

    auto path = build_zigzag_sequence(std::vector<SimplicialComplex>{edge("a", "b"), edge("b", "c")});
    CHECK(path.at(2) == clique_complex(make_graph({{"a", "b"}, {"b", "c"}}), 2));

    CHECK_THROWS_AS(ZigzagComplexSequence({vertex("a"), vertex("b"), vertex("a")}), ContractViolation);
    CHECK_THROWS_AS(ZigzagComplexSequence({vertex("a"), vertex("a")}), ContractViolation);
    CHECK_THROWS_AS(ZigzagComplexSequence(std::vector<SimplicialComplex>{}), ContractViolation);
    CHECK_THROWS_AS(build_zigzag_sequence(std::vector<SimplicialComplex>{}), ValidationError);
}

TEST_CASE("union modes differ exactly on cliques spanning both edge sets") {
    auto g1 = make_graph({{"a", "b"}, {"b", "c"}});
    auto g2 = make_graph({{"a", "c"}});
    auto graph_first = build_zigzag_sequence(std::vector<Snapshot>{g1, g2}, 2, UnionMode::CliqueOfUnionGraph);
    auto simplex_first = build_zigzag_sequence(std::vector<Snapshot>{g1, g2}, 2, UnionMode::SimplexUnion);
    CHECK(graph_first.at(2).count(2) == 1);
    CHECK(simplex_first.at(2).count(2) == 0);
    CHECK(zigzag_persistence(graph_first, 1).bars.empty());
    CHECK(bars_of(zigzag_persistence(simplex_first, 1)) == std::vector<ZigzagBar>{{2, 2, false}});
    testkit::checked_zigzag(graph_first);
    testkit::checked_zigzag(simplex_first);
}

TEST_CASE("zigzag examples") {
    auto ab = build_zigzag_sequence(std::vector<SimplicialComplex>{vertex("a"), vertex("b")});
    auto pd = testkit::checked_zigzag(ab)[0];
    CHECK(bars_of(pd) == std::vector<ZigzagBar>{{1, 2, false}, {2, 3, true}});
    CHECK(bars_of(interval_multiplicity_oracle(ab, 0)) == bars_of(pd));
    CHECK(generalized_rank_oracle(ab, 0, 1, 3) == 0);
    CHECK(generalized_rank_oracle(ab, 0, 2, 2) == 2);
    CHECK(generalized_rank_oracle(ab, 0, 1, 2) == 1);

    auto path = build_zigzag_sequence(std::vector<SimplicialComplex>{edge("a", "b"), edge("b", "c")});
    auto pp = testkit::checked_zigzag(path)[0];
    CHECK(bars_of(pp) == std::vector<ZigzagBar>{{1, 3, true}});
    CHECK(bars_of(interval_multiplicity_oracle(path, 0)) == bars_of(pp));

    // Constant sequence of a 4-cycle: one full H0 bar and one full H1 bar.
    auto square = clique_complex(make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}), 2);
    auto constant = build_zigzag_sequence(std::vector<SimplicialComplex>{square, square, square});
    for (int k = 0; k < 2; ++k) {
        auto c = zigzag_persistence(constant, k);
        CHECK(bars_of(c) == std::vector<ZigzagBar>{{1, 5, true}});
        CHECK(bars_of(interval_multiplicity_oracle(constant, k)) == bars_of(c));
        for (std::uint32_t i = 1; i <= 5; ++i)
            for (std::uint32_t j = i; j <= 5; ++j) CHECK(generalized_rank_oracle(constant, k, i, j) == 1);
    }
    // Two disjoint edges at every time: multiplicity two.
    auto two = SimplicialComplex::closure_of({{NodeId("a"), NodeId("b")}, {NodeId("c"), NodeId("d")}}, 2);
    auto twice = build_zigzag_sequence(std::vector<SimplicialComplex>{two, two});
    CHECK(bars_of(zigzag_persistence(twice, 0)) == std::vector<ZigzagBar>{{1, 3, true}, {1, 3, true}});

    CHECK_THROWS_AS(zigzag_persistence(path, 2), ContractViolation);
    CHECK_THROWS_AS(zigzag_persistence(path, -1), ContractViolation);
}

TEST_CASE("homology oracle examples") {
    auto square = clique_complex(make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}), 2);
    CHECK(homology_dimension_oracle(square, 1) == 1);
    auto two = clique_complex(make_graph({{"a", "b"}, {"c", "d"}}), 2);
    CHECK(homology_dimension_oracle(two, 0) == 2);
    CHECK(homology_dimension_oracle(SimplicialComplex(2), 0) == 0);
}

TEST_CASE("sparse Betti numbers agree with the dense oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = testkit::random_snapshot(rng, 8, 0.55);
        for (int D : {1, 2, 3}) {
            auto c = clique_complex(g, D);
            auto betti = betti_numbers(c);
            REQUIRE(betti.size() == static_cast<std::size_t>(D + 1));
            for (int k = 0; k <= D; ++k) CHECK(betti[k] == homology_dimension_oracle(c, k));
        }
    }
}

TEST_CASE("zigzag persistence equals the interval multiplicity oracle") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 120; ++trial) {
        auto tg = testkit::random_temporal_graph(rng, 7, 4);
        auto mode = trial % 3 == 0 ? UnionMode::SimplexUnion : UnionMode::CliqueOfUnionGraph;
        auto seq = build_zigzag_sequence(tg.snapshots(), 2, mode);
        auto all = testkit::checked_zigzag(seq);
        for (int k = 0; k < 2; ++k) {
            CHECK(all[k].dim == k);
            CHECK(all[k].length == seq.size());
            CHECK(all[k] == interval_multiplicity_oracle(seq, k));
            CHECK(all[k] == zigzag_persistence(seq, k));
        }
    }
}

TEST_CASE("zigzag on arbitrary complexes, including dimension 2") {
    // Random complexes with unions taken simplex-wise, maxdim 3 so H2 is reachable.
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> td(1, 4);
        std::vector<SimplicialComplex> snaps;
        for (int t = td(rng); t > 0; --t) snaps.push_back(clique_complex(testkit::random_snapshot(rng, 6, 0.7), 3));
        auto seq = build_zigzag_sequence(snaps);
        auto all = testkit::checked_zigzag(seq);
        REQUIRE(all.size() == 3);
        for (int k = 0; k < 3; ++k) CHECK(all[k] == interval_multiplicity_oracle(seq, k));
    }
}

TEST_CASE("time reversal mirrors every interval") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        auto tg = testkit::random_temporal_graph(rng, 8, 5);
        auto seq = build_zigzag_sequence(tg.snapshots(), 2);
        auto rev = seq.reversed();
        const auto n = static_cast<std::uint32_t>(seq.size());
        auto fwd = testkit::checked_zigzag(seq);
        auto bwd = testkit::checked_zigzag(rev);
        for (int k = 0; k < 2; ++k) {
            ZigzagDiagram mirrored{k, n, {}};
            for (const auto& b : fwd[k].bars) mirrored.bars.push_back({n + 1 - b.death, n + 1 - b.birth, b.birth == 1});
            mirrored.normalize();
            CHECK(mirrored == bwd[k]);
        }
    }
}

TEST_CASE("nested sequences give ordinary persistence") {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testkit::random_snapshot(rng, 8, 0.5, 1.0);
        std::vector<Snapshot> growing;
        Snapshot acc;
        for (const auto& n : g.nodes()) acc.add_node(n);
        growing.push_back(acc);
        for (const auto& [e, w] : g.edges()) {
            acc.set_edge(e.u, e.v, w);
            growing.push_back(acc);
            if (growing.size() == 5) break;
        }
        auto seq = build_zigzag_sequence(growing, 2);
        for (std::size_t s = 2; s <= seq.size(); s += 2) CHECK(seq.at(s) == seq.at(s + 1));
        auto all = testkit::checked_zigzag(seq);
        for (const auto& b : all[0].bars) CHECK(b.birth == 1);
        // Ordinary persistence of a growing graph: H0 bars never end at a union
        // position because unions equal the following snapshot.
        for (const auto& b : all[0].bars)
            if (!b.right_open) CHECK(b.death % 2 == 1);
        for (const auto& b : all[1].bars) {
            CHECK(b.birth % 2 == 0);
            if (!b.right_open) CHECK(b.death % 2 == 1);
        }
    }
}

TEST_CASE("rank at an index counts containing bars") {
    ZigzagDiagram pd{0, 5, {{1, 2, false}, {2, 5, true}, {4, 4, false}}};
    CHECK(pd.rank_at(1) == 1);
    CHECK(pd.rank_at(2) == 2);
    CHECK(pd.rank_at(4) == 2);
    CHECK(pd.rank_at(5) == 1);
}
