#include "support/testkit.hpp"

#include "tmpfp/distance.hpp"
#include "tmpfp/error.hpp"
#include "tmpfp/tensor.hpp"
#include "tmpfp/vectorization.hpp"

#include <doctest.h>

using namespace tmpfp;

namespace {

EvaluationGrid steps(double lo, double hi, double h) {
    EvaluationGrid g;
    for (double t = lo; t <= hi + 1e-12; t += h) g.points.push_back(t);
    return g;
}

// k-th largest tent by full sort.
double landscape_ref(const std::vector<Bar>& bars, double t, std::size_t level) {
    std::vector<double> v;
    for (const auto& b : bars) {
        double up = t - b.birth, down = b.death - t;
        v.push_back(up > 0 && down > 0 ? std::min(up, down) : 0.0);
    }
    std::sort(v.rbegin(), v.rend());
    return level <= v.size() ? v[level - 1] : 0.0;
}

}  // namespace

TEST_CASE("grids") {
    CHECK(time_grid(1).points == std::vector<double>{1.0});
    CHECK(time_grid(2).points == std::vector<double>{1, 1.25, 1.5, 1.75, 2});
    for (std::size_t T = 1; T < 20; ++T) CHECK(time_grid(T).points.size() == 4 * T - 3);
    CHECK(grid_with_midpoints({0, 1, 3}).points == std::vector<double>{0, 0.5, 1, 2, 3});
    CHECK_THROWS_AS(grid_with_midpoints({}), ContractViolation);
    CHECK_THROWS_AS(grid_with_midpoints({1, 1}), ContractViolation);
}

TEST_CASE("landscape examples") {
    auto g = steps(0, 2, 0.5);
    CHECK(landscape_vector(std::vector<Bar>{}, g) == std::vector<double>(5, 0.0));
    CHECK(landscape_vector(std::vector<Bar>{{0, 2}}, g) == std::vector<double>{0, 0.5, 1, 0.5, 0});
    auto g3 = steps(0, 3, 0.5);
    CHECK(landscape_vector(std::vector<Bar>{{0, 2}, {1, 3}}, g3) == std::vector<double>{0, 0.5, 1, 0.5, 1, 0.5, 0});
    CHECK(landscape_vector(std::vector<Bar>{{0, 2}, {1, 3}}, g3, 2) == std::vector<double>{0, 0, 0, 0.5, 0, 0, 0});
    CHECK(landscape_vector(std::vector<Bar>{{1, 1}}, g3) == std::vector<double>(7, 0.0));
    CHECK_THROWS_AS(landscape_vector(std::vector<Bar>{}, g, 0), ContractViolation);
}

TEST_CASE("landscape levels match a full sort") {
    std::mt19937_64 rng(41);
    auto g = steps(0, 5, 0.25);
    for (int trial = 0; trial < 300; ++trial) {
        auto bars = testkit::random_bars(rng, 6);
        for (std::size_t level = 1; level <= 4; ++level) {
            auto v = landscape_vector(bars, g, level);
            for (std::size_t i = 0; i < g.points.size(); ++i) CHECK(v[i] == landscape_ref(bars, g.points[i], level));
            if (level > 1) {
                auto above = landscape_vector(bars, g, level - 1);
                for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] <= above[i]);
            }
        }
    }
}

TEST_CASE("silhouette examples") {
    auto g = steps(0, 4, 1);
    CHECK(silhouette_vector(std::vector<Bar>{}, g) == std::vector<double>(5, 0.0));
    auto s = silhouette_vector(std::vector<Bar>{{0, 2}, {0, 4}}, g, 1.0);
    CHECK(s[1] == doctest::Approx(1.0));
    CHECK(s[2] == doctest::Approx(4.0 / 3.0));
    CHECK(silhouette_vector(std::vector<Bar>{{2, 2}}, g) == std::vector<double>(5, 0.0));

    std::mt19937_64 rng(42);
    auto fine = steps(0, 5, 0.25);
    for (int trial = 0; trial < 100; ++trial) {
        auto bars = testkit::random_bars(rng, 1);
        if (bars.empty()) continue;
        for (double p : {0.0, 1.0, 2.5}) {
            auto sv = silhouette_vector(bars, fine, p);
            auto lv = landscape_vector(bars, fine);
            for (std::size_t i = 0; i < sv.size(); ++i) CHECK(sv[i] == doctest::Approx(lv[i]));
        }
    }
}

TEST_CASE("zigzag Betti curve examples") {
    CHECK(betti_vector_zigzag(ZigzagDiagram{0, 3, {{1, 3, true}}}, 2) == std::vector<double>{1, 1, 1});
    CHECK(betti_vector_zigzag(ZigzagDiagram{0, 3, {{1, 2, false}, {2, 3, true}}}, 2) ==
          std::vector<double>{1, 2, 1});
    CHECK(betti_vector_zigzag(ZigzagDiagram{0, 3, {}}, 2) == std::vector<double>{0, 0, 0});
    CHECK_THROWS_AS(betti_vector_zigzag(ZigzagDiagram{0, 3, {}}, 3), ContractViolation);
}

TEST_CASE("fast Betti examples") {
    auto square = clique_complex(testkit::make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}}), 2);
    auto k4 = clique_complex(
        testkit::make_graph({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}}), 2);
    CHECK(betti_vector_fast({square, square, square}, 1) == std::vector<double>{1, 1, 1});
    CHECK(betti_vector_fast({k4, square}, 1) == std::vector<double>{0, 1});
}

TEST_CASE("fast Betti equals the zigzag Betti curve at snapshot positions") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 150; ++trial) {
        auto tg = testkit::random_temporal_graph(rng, 8, 5);
        std::vector<SimplicialComplex> cx;
        for (const auto& s : tg.snapshots()) cx.push_back(clique_complex(s, 2));
        auto seq = build_zigzag_sequence(tg.snapshots(), 2);
        auto all = testkit::checked_zigzag(seq);
        for (int k = 0; k < 2; ++k) {
            auto zz = betti_vector_zigzag(all[k], tg.length());
            auto fast = betti_vector_fast(cx, k);
            for (std::size_t t = 1; t <= tg.length(); ++t) CHECK(fast[t - 1] == zz[2 * t - 2]);
        }
    }
}

TEST_CASE("entropy examples and range") {
    auto g = steps(0, 4, 1);
    CHECK(entropy_vector(std::vector<Bar>{}, g) == std::vector<double>(5, 0.0));
    CHECK(entropy_vector(std::vector<Bar>{{0, 4}}, g) == std::vector<double>(5, 0.0));
    auto two = entropy_vector(std::vector<Bar>{{0, 2}, {1, 3}}, steps(1, 2, 1));
    CHECK(two[0] == doctest::Approx(std::log(2.0)));
    CHECK(two[1] == doctest::Approx(std::log(2.0)));

    std::mt19937_64 rng(44);
    auto fine = steps(0, 5, 0.25);
    for (int trial = 0; trial < 200; ++trial) {
        auto bars = testkit::random_bars(rng, 8);
        auto e = entropy_vector(bars, fine);
        for (std::size_t i = 0; i < fine.points.size(); ++i) {
            std::size_t alive = 0;
            for (const auto& b : bars) alive += b.birth <= fine.points[i] && fine.points[i] <= b.death;
            CHECK(e[i] >= 0.0);
            CHECK(e[i] <= std::log(std::max<std::size_t>(alive, 1)) + 1e-12);
        }
    }
}

TEST_CASE("Gaussian pixel mass matches numerical integration") {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> u(-3.0, 3.0), s(0.05, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        double a = u(rng), b = u(rng), mu = u(rng), sigma = s(rng);
        if (a > b) std::swap(a, b);
        CHECK(gaussian_mass(a, b, mu, sigma) == doctest::Approx(testkit::simpson_gaussian_mass(a, b, mu, sigma)).epsilon(1e-8));
    }
    CHECK(gaussian_mass(40, 41, 0, 1) >= 0.0);
    CHECK(gaussian_mass(-1e9, 1e9, 0, 1) == doctest::Approx(1.0));
}

TEST_CASE("persistence image examples") {
    ImageBounds bounds{0, 4, 0, 4};
    CHECK(persistence_image(std::vector<Bar>{}, 4, 4, 1.0, bounds) == std::vector<double>(16, 0.0));

    // Birth 1.5 and persistence 2.5 sit at the center of pixel (row 2, col 1).
    Bar bar{1.5, 4.0};
    auto img = persistence_image(std::vector<Bar>{bar}, 4, 4, 1e-3, bounds);
    const double w = 2.5;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            if (r == 2 && c == 1)
                CHECK(img[r * 4 + c] == doctest::Approx(w).epsilon(1e-9));
            else
                CHECK(img[r * 4 + c] < 1e-6 * w);
        }

    CHECK(persistence_image(std::vector<Bar>{{2, 2}}, 4, 4, 1.0, bounds) == std::vector<double>(16, 0.0));
    CHECK_THROWS_AS(persistence_image(std::vector<Bar>{bar}, 4, 4, 0.0, bounds), ContractViolation);
    CHECK_THROWS_AS(persistence_image(std::vector<Bar>{bar}, 0, 4, 1.0, bounds), ContractViolation);
}

TEST_CASE("persistence image mass, additivity and permutation invariance") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = testkit::random_bars(rng, 5);
        auto b = testkit::random_bars(rng, 5);
        ImageBounds bounds{-1, 7, -1, 7};
        auto ia = persistence_image(a, 6, 7, 0.4, bounds);
        auto ib = persistence_image(b, 6, 7, 0.4, bounds);
        auto ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        auto iab = persistence_image(ab, 6, 7, 0.4, bounds);
        for (std::size_t i = 0; i < iab.size(); ++i) CHECK(iab[i] == doctest::Approx(ia[i] + ib[i]));

        auto shuffled = ab;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto is = persistence_image(shuffled, 6, 7, 0.4, bounds);
        for (std::size_t i = 0; i < is.size(); ++i) CHECK(is[i] == doctest::Approx(iab[i]));

        double total_w = 0.0, total = 0.0;
        for (const auto& x : ab) total_w += persistence_weight(x);
        for (double v : iab) total += v;
        CHECK(total <= total_w + 1e-9);

        // Bounds far beyond every bar capture the full mass.
        auto wide = persistence_image(ab, 3, 3, 0.4, ImageBounds{-100, 100, -100, 100});
        double wide_total = 0.0;
        for (double v : wide) wide_total += v;
        CHECK(wide_total == doctest::Approx(total_w));
    }
}

TEST_CASE("image bounds") {
    CHECK(image_bounds(std::vector<Bar>{}) == ImageBounds{0, 1, 0, 1});
    CHECK(image_bounds(std::vector<Bar>{{1, 3}}) == ImageBounds{0.5, 1.5, 1.5, 2.5});
    CHECK(image_bounds(std::vector<Bar>{{1, 3}, {2, 2.5}}) == ImageBounds{1, 2, 0.5, 2});
}

TEST_CASE("tensor assembly shapes") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::uint32_t> d(1, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t m = d(rng), k = d(rng), l = d(rng);
        std::vector<SliceVector> slices(m, SliceVector{{k, l}, std::vector<double>(k * l, 1.0)});
        auto t = assemble_tmp(slices);
        CHECK(t.shape() == std::vector<std::uint32_t>{m, k, l});
        CHECK(t.slice(m - 1).size() == k * l);
    }
    std::vector<SliceVector> landscape(3, SliceVector{{17}, std::vector<double>(17, 0.0)});
    CHECK(assemble_tmp(landscape).shape() == std::vector<std::uint32_t>{3, 17});
    std::vector<SliceVector> betti(2, SliceVector{{7}, std::vector<double>(7, 0.0)});
    CHECK(assemble_tmp(betti).shape() == std::vector<std::uint32_t>{2, 7});
    std::vector<SliceVector> image(2, SliceVector{{10, 10}, std::vector<double>(100, 0.0)});
    CHECK(assemble_tmp(image).shape() == std::vector<std::uint32_t>{2, 10, 10});

    std::vector<SliceVector> mismatched{{{3}, {1, 2, 3}}, {{4}, {1, 2, 3, 4}}};
    CHECK_THROWS_AS(assemble_tmp(mismatched), ComputationError);
    std::vector<SliceVector> bad{{{1}, {std::nan("")}}};
    CHECK_THROWS_AS(assemble_tmp(bad), ComputationError);
    CHECK_THROWS_AS(assemble_tmp({}), ComputationError);
}

TEST_CASE("vectorization names") {
    for (auto k : {VectorizationKind::Landscape, VectorizationKind::Silhouette, VectorizationKind::BettiZigzag,
                   VectorizationKind::BettiFast, VectorizationKind::Entropy, VectorizationKind::Image})
        CHECK(parse_vectorization_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_vectorization_kind("kernel"), ValidationError);
}
