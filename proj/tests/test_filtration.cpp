#include "support/testkit.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/filtration.hpp"
#include "tmpfp/homology.hpp"

#include <doctest.h>

#include <deque>

using namespace tmpfp;
using testkit::make_graph;

namespace {

double value_of(const std::map<NodeId, double>& m, const char* label) { return m.at(NodeId(label)); }

// Betweenness from pair counts: σ_st(v) = σ_sv σ_vt whenever v lies on a
// shortest s-t path, summed over unordered pairs.
std::map<NodeId, double> betweenness_by_pairs(const Snapshot& g) {
    std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
    const std::size_t n = nodes.size();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    std::vector<std::vector<double>> count(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        dist[s][s] = 0;
        count[s][s] = 1;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            auto u = q.front();
            q.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (!g.has_edge(nodes[u], nodes[v])) continue;
                if (dist[s][v] < 0) {
                    dist[s][v] = dist[s][u] + 1;
                    q.push_back(v);
                }
                if (dist[s][v] == dist[s][u] + 1) count[s][v] += count[s][u];
            }
        }
    }
    std::map<NodeId, double> out;
    for (std::size_t v = 0; v < n; ++v) {
        double acc = 0.0;
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = s + 1; t < n; ++t) {
                if (s == v || t == v || dist[s][t] < 0 || dist[s][v] < 0 || dist[v][t] < 0) continue;
                if (dist[s][v] + dist[v][t] == dist[s][t]) acc += count[s][v] * count[v][t] / count[s][t];
            }
        out[nodes[v]] = acc;
    }
    return out;
}

// All-pairs weighted distances by Floyd-Warshall.
std::map<Edge, double> floyd(const Snapshot& g) {
    std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
    const std::size_t n = nodes.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && g.has_edge(nodes[i], nodes[j])) d[i][j] = g.weight(nodes[i], nodes[j]);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    std::map<Edge, double> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::isfinite(d[i][j])) out[Edge{nodes[i], nodes[j]}] = d[i][j];
    return out;
}

}  // namespace

TEST_CASE("node filter examples") {
    auto path = make_graph({{"a", "b"}, {"b", "c"}});
    auto deg = node_filter_values(path, FilterKind::Degree);
    CHECK(value_of(deg, "a") == 1);
    CHECK(value_of(deg, "b") == 2);
    CHECK(value_of(deg, "c") == 1);

    auto star = make_graph({{"h", "x"}, {"h", "y"}, {"h", "z"}});
    auto bc = node_filter_values(star, FilterKind::Betweenness);
    CHECK(value_of(bc, "h") == 3);
    CHECK(value_of(bc, "x") == 0);

    auto tri = make_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    for (const auto& [n, v] : node_filter_values(tri, FilterKind::Closeness)) CHECK(v == 1.0);

    Snapshot iso;
    iso.add_node(NodeId("solo"));
    CHECK(value_of(node_filter_values(iso, FilterKind::Closeness), "solo") == 0.0);

    Snapshot weighted;
    weighted.add_edge(NodeId("a"), NodeId("b"), 2.5);
    weighted.add_edge(NodeId("a"), NodeId("c"), 0.5);
    CHECK(value_of(node_filter_values(weighted, FilterKind::Degree), "a") == 3.0);

    CHECK_THROWS_AS(node_filter_values(path, FilterKind::EdgeWeightSublevel), ContractViolation);
}

TEST_CASE("closeness is computed inside each component") {
    // Path a-b-c plus a separate edge d-e.
    auto g = make_graph({{"a", "b"}, {"b", "c"}, {"d", "e"}});
    auto cl = node_filter_values(g, FilterKind::Closeness);
    CHECK(value_of(cl, "b") == doctest::Approx(1.0));
    CHECK(value_of(cl, "a") == doctest::Approx(2.0 / 3.0));
    CHECK(value_of(cl, "d") == doctest::Approx(1.0));
}

TEST_CASE("betweenness matches the pair-counting definition") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = testkit::random_snapshot(rng, 9, 0.35);
        auto fast = node_filter_values(g, FilterKind::Betweenness);
        auto ref = betweenness_by_pairs(g);
        for (const auto& [n, v] : ref) CHECK(fast.at(n) == doctest::Approx(v));
    }
}

TEST_CASE("geodesic distances match Floyd-Warshall") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = testkit::random_snapshot(rng, 9, 0.3);
        auto got = geodesic_distances(g);
        auto ref = floyd(g);
        REQUIRE(got.size() == ref.size());
        for (const auto& [e, d] : ref) CHECK(got.at(e) == doctest::Approx(d));
    }
}

TEST_CASE("quantile threshold examples") {
    std::vector<double> v{1, 2, 3, 4};
    CHECK(quantile_thresholds(v, 2).values == std::vector<double>{2.5, 4});
    std::vector<double> same{5, 5, 5};
    for (std::size_t m : {1u, 3u, 50u}) CHECK(quantile_thresholds(same, m).values == std::vector<double>{5});
    std::vector<double> hundred;
    for (int i = 0; i <= 100; ++i) hundred.push_back(i);
    CHECK(quantile_thresholds(hundred, 4).values == std::vector<double>{25, 50, 75, 100});
    CHECK_THROWS_AS(quantile_thresholds(std::vector<double>{}, 3), ValidationError);
    CHECK_THROWS_AS(quantile_thresholds(v, 0), ValidationError);
}

TEST_CASE("quantile thresholds are strictly increasing and end at the maximum") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> len(1, 40), val(0, 12);
    std::uniform_int_distribution<std::size_t> res(1, 30);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = val(rng) / 2.0;
        auto m = res(rng);
        auto g = quantile_thresholds(v, m);
        CHECK(g.values.size() <= m);
        CHECK(g.values.back() == *std::max_element(v.begin(), v.end()));
        CHECK(g.values.front() >= *std::min_element(v.begin(), v.end()));
        for (std::size_t i = 1; i < g.values.size(); ++i) CHECK(g.values[i - 1] < g.values[i]);
    }
}

TEST_CASE("sublevel bifiltration examples") {
    auto path = make_graph({{"a", "b"}, {"b", "c"}});
    TemporalGraph tg({path});
    FilterSpec degree{FilterKind::Degree, Orientation::Sublevel};
    auto bif = sublevel_bifiltration(tg, degree, explicit_grid({1, 2}), 2);
    CHECK(bif.graph(1, 1).nodes() == std::set<NodeId>{NodeId("a"), NodeId("c")});
    CHECK(bif.graph(1, 1).edge_count() == 0);
    CHECK(homology_dimension_oracle(bif.cell(1, 1), 0) == 2);
    CHECK(bif.cell(2, 1) == clique_complex(path, 2));

    // Superlevel of f on {1,2} equals sublevel of -f on {-2,-1}: level 1 keeps
    // the node of degree 2 only, level 2 keeps everything.
    FilterSpec super{FilterKind::Degree, Orientation::Superlevel};
    auto sup = sublevel_bifiltration(tg, super, explicit_grid({1, 2}), 2);
    CHECK(sup.graph(1, 1).nodes() == std::set<NodeId>{NodeId("b")});
    CHECK(sup.cell(2, 1) == clique_complex(path, 2));

    CHECK_THROWS_AS(explicit_grid({}), ValidationError);
    CHECK_THROWS_AS(explicit_grid({2, 1}), ValidationError);
    ThresholdGrid empty;
    CHECK_THROWS_AS(sublevel_bifiltration(tg, degree, empty, 2), ValidationError);
}

TEST_CASE("bifiltration cells grow with the level for every filter") {
    std::mt19937_64 rng(24);
    for (auto kind : {FilterKind::Degree, FilterKind::Closeness, FilterKind::Betweenness,
                      FilterKind::EdgeWeightSublevel, FilterKind::PowerGeodesic}) {
        for (auto orient : {Orientation::Sublevel, Orientation::Superlevel}) {
            for (int trial = 0; trial < 15; ++trial) {
                auto tg = testkit::random_temporal_graph(rng, 8, 4);
                auto pool = filter_value_pool(tg, kind);
                if (pool.empty()) continue;
                auto grid = quantile_thresholds(pool, 5);
                FilterSpec spec{kind, orient};
                auto bif = sublevel_bifiltration(tg, spec, grid, 2);
                for (std::size_t t = 1; t <= tg.length(); ++t) {
                    for (std::size_t j = 1; j < bif.levels(); ++j)
                        CHECK(bif.cell(j, t).is_subcomplex_of(bif.cell(j + 1, t)));
                    // The top cell of a quantile grid keeps the whole graph.
                    if (orient == Orientation::Sublevel && kind != FilterKind::PowerGeodesic)
                        CHECK(bif.cell(bif.levels(), t) == clique_complex(tg.at(t), 2));
                    for (std::size_t j = 1; j <= bif.levels(); ++j) {
                        double alpha = orient == Orientation::Sublevel ? grid.values[j - 1]
                                                                       : grid.values[grid.resolution() - j];
                        CHECK(bif.graph(j, t) == filtered_subgraph(tg.at(t), spec, alpha));
                    }
                }
            }
        }
    }
}

TEST_CASE("entry levels reproduce every cell") {
    std::mt19937_64 rng(25);
    for (auto kind : {FilterKind::Degree, FilterKind::Betweenness, FilterKind::EdgeWeightSublevel,
                      FilterKind::PowerGeodesic}) {
        for (auto orient : {Orientation::Sublevel, Orientation::Superlevel}) {
            for (int trial = 0; trial < 10; ++trial) {
                auto tg = testkit::random_temporal_graph(rng, 8, 3);
                auto pool = filter_value_pool(tg, kind);
                if (pool.empty()) continue;
                auto grid = quantile_thresholds(pool, 4);
                FilterSpec spec{kind, orient};
                auto bif = sublevel_bifiltration(tg, spec, grid, 2);
                for (std::size_t t = 1; t <= tg.length(); ++t) {
                    auto lv = entry_levels(tg.at(t), spec, grid, 2);
                    for (std::size_t j = 1; j <= grid.resolution(); ++j) {
                        std::vector<Simplex> cell;
                        for (const auto& s : lv)
                            if (s.level <= j) cell.push_back(s.simplex);
                        CHECK(SimplicialComplex::closure_of(cell, 2) == bif.cell(j, t));
                    }
                }
            }
        }
    }
}

TEST_CASE("power filtration examples") {
    auto path = make_graph({{"a", "b"}, {"b", "c"}});
    auto seq = power_filtration_sequence(path, explicit_grid({0.5, 1, 2}), 2);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0].count(1) == 0);
    CHECK(seq[0].count(0) == 3);
    CHECK(seq[1].count(1) == 2);
    CHECK(seq[2].count(1) == 3);
    CHECK(seq[2].count(2) == 1);

    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testkit::random_snapshot(rng, 8, 0.3);
        auto dist = geodesic_distances(g);
        if (dist.empty()) continue;
        std::vector<double> d;
        for (const auto& [e, x] : dist) d.push_back(x);
        auto grid = quantile_thresholds(d, 6);
        auto s = power_filtration_sequence(g, grid, 2);
        for (std::size_t j = 1; j < s.size(); ++j) CHECK(s[j - 1].is_subcomplex_of(s[j]));
        // At the largest distance each component is complete.
        Snapshot complete;
        for (const auto& n : g.nodes()) complete.add_node(n);
        for (const auto& [e, x] : dist) complete.set_edge(e.u, e.v, 1.0);
        CHECK(s.back() == clique_complex(complete, 2));
    }
}

TEST_CASE("clique complex examples and invariants") {
    auto tri = make_graph({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto c = clique_complex(tri, 2);
    CHECK(c.count(0) == 3);
    CHECK(c.count(1) == 3);
    CHECK(c.count(2) == 1);
    CHECK(homology_dimension_oracle(c, 1) == 0);

    auto square = make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
    auto sq = clique_complex(square, 2);
    CHECK(sq.count(2) == 0);
    CHECK(homology_dimension_oracle(sq, 1) == 1);

    auto k4 = make_graph({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
    auto kc = clique_complex(k4, 2);
    CHECK(kc.count(2) == 4);
    CHECK(homology_dimension_oracle(kc, 0) == 1);
    CHECK(homology_dimension_oracle(kc, 1) == 0);
    CHECK(homology_dimension_oracle(kc, 2) == 1);

    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = testkit::random_snapshot(rng, 8, 0.5);
        auto cx = clique_complex(g, 2);
        CHECK(cx.is_face_closed());
        // 1-skeleton equals the graph.
        CHECK(cx.count(0) == g.node_count());
        for (const auto& e : cx.of_dimension(1)) CHECK(g.has_edge(e[0], e[1]));
        CHECK(cx.count(1) == g.edge_count());
        // Independent triangle count.
        std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
        long triangles = 0;
        for (std::size_t a = 0; a < nodes.size(); ++a)
            for (std::size_t b = a + 1; b < nodes.size(); ++b)
                for (std::size_t d = b + 1; d < nodes.size(); ++d)
                    if (g.has_edge(nodes[a], nodes[b]) && g.has_edge(nodes[b], nodes[d]) &&
                        g.has_edge(nodes[a], nodes[d]))
                        ++triangles;
        CHECK(cx.euler_characteristic() ==
              static_cast<long>(g.node_count()) - static_cast<long>(g.edge_count()) + triangles);
    }
}
