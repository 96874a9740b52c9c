#include "tmpfp/vectorization.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/homology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace tmpfp {

std::vector<Bar> to_time_bars(const ZigzagDiagram& pd) {
    std::vector<Bar> out;
    out.reserve(pd.bars.size());
    for (const auto& b : pd.bars) out.push_back({ZigzagIndex(b.birth).time(), ZigzagIndex(b.death).time()});
    return out;
}

EvaluationGrid grid_with_midpoints(const std::vector<double>& thresholds) {
    if (thresholds.empty()) throw ContractViolation("evaluation grid needs at least one threshold");
    EvaluationGrid g;
    g.points.reserve(2 * thresholds.size() - 1);
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (i > 0) {
            if (!(thresholds[i - 1] < thresholds[i])) throw ContractViolation("thresholds must increase");
            g.points.push_back((thresholds[i - 1] + thresholds[i]) / 2.0);
        }
        g.points.push_back(thresholds[i]);
    }
    return g;
}

EvaluationGrid time_grid(std::size_t T) {
    if (T < 1) throw ContractViolation("time grid needs T >= 1");
    std::vector<double> times;
    for (std::size_t s = 1; s <= 2 * T - 1; ++s) times.push_back((static_cast<double>(s) + 1.0) / 2.0);
    return grid_with_midpoints(times);
}

double tent(const Bar& bar, double t) noexcept { return std::max(0.0, std::min(t - bar.birth, bar.death - t)); }

std::vector<double> landscape_vector(std::span<const Bar> bars, const EvaluationGrid& grid, std::size_t level) {
    if (level < 1) throw ContractViolation("landscape level starts at 1");
    std::vector<double> out(grid.points.size(), 0.0);
    if (bars.size() < level) return out;
    std::vector<double> values(bars.size());
    for (std::size_t g = 0; g < grid.points.size(); ++g) {
        for (std::size_t i = 0; i < bars.size(); ++i) values[i] = tent(bars[i], grid.points[g]);
        std::nth_element(values.begin(), values.begin() + static_cast<long>(level - 1), values.end(),
                         std::greater<>());
        out[g] = values[level - 1];
    }
    return out;
}

std::vector<double> silhouette_vector(std::span<const Bar> bars, const EvaluationGrid& grid, double p) {
    if (!(p >= 0.0)) throw ContractViolation("silhouette power must be nonnegative");
    std::vector<double> out(grid.points.size(), 0.0);
    std::vector<double> w;
    double total = 0.0;
    for (const auto& b : bars) {
        double len = std::max(0.0, b.persistence());
        w.push_back(len > 0.0 ? std::pow(len, p) : 0.0);
        total += w.back();
    }
    if (total <= 0.0) return out;
    for (std::size_t g = 0; g < grid.points.size(); ++g) {
        double acc = 0.0;
        for (std::size_t i = 0; i < bars.size(); ++i) acc += w[i] * tent(bars[i], grid.points[g]);
        out[g] = acc / total;
    }
    return out;
}

std::vector<double> betti_vector_zigzag(const ZigzagDiagram& pd, std::size_t T) {
    if (T < 1 || pd.length != 2 * T - 1) throw ContractViolation("diagram length does not match 2T-1");
    std::vector<double> out(pd.length, 0.0);
    for (const auto& b : pd.bars)
        for (std::uint32_t s = b.birth; s <= b.death; ++s) out[s - 1] += 1.0;
    return out;
}

std::vector<double> betti_vector_fast(const std::vector<SimplicialComplex>& complexes_at_t, int k) {
    if (k < 0) throw ContractViolation("homology dimension must be nonnegative");
    std::vector<double> out;
    out.reserve(complexes_at_t.size());
    for (const auto& c : complexes_at_t) {
        auto betti = betti_numbers(c);
        out.push_back(static_cast<std::size_t>(k) < betti.size() ? static_cast<double>(betti[k]) : 0.0);
    }
    return out;
}

std::vector<double> entropy_vector(std::span<const Bar> bars, const EvaluationGrid& grid) {
    std::vector<double> out(grid.points.size(), 0.0);
    for (std::size_t g = 0; g < grid.points.size(); ++g) {
        const double t = grid.points[g];
        double total = 0.0;
        std::size_t alive = 0;
        for (const auto& b : bars) {
            if (b.birth <= t && t <= b.death) {
                total += std::max(0.0, b.persistence());
                ++alive;
            }
        }
        if (alive <= 1 || total <= 0.0) continue;
        double e = 0.0;
        for (const auto& b : bars) {
            if (b.birth <= t && t <= b.death && b.persistence() > 0.0) {
                double q = b.persistence() / total;
                e -= q * std::log(q);
            }
        }
        out[g] = std::max(0.0, e);
    }
    return out;
}

ImageBounds image_bounds(std::span<const Bar> bars) {
    ImageBounds b;
    if (bars.empty()) return b;
    b.birth_min = b.birth_max = bars.front().birth;
    b.pers_min = b.pers_max = std::max(0.0, bars.front().persistence());
    for (const auto& bar : bars) {
        b.birth_min = std::min(b.birth_min, bar.birth);
        b.birth_max = std::max(b.birth_max, bar.birth);
        b.pers_min = std::min(b.pers_min, std::max(0.0, bar.persistence()));
        b.pers_max = std::max(b.pers_max, std::max(0.0, bar.persistence()));
    }
    if (b.birth_min == b.birth_max) {
        b.birth_min -= 0.5;
        b.birth_max += 0.5;
    }
    if (b.pers_min == b.pers_max) {
        b.pers_min -= 0.5;
        b.pers_max += 0.5;
    }
    return b;
}

double persistence_weight(const Bar& bar) { return std::max(0.0, bar.persistence()); }

double gaussian_mass(double lo, double hi, double mu, double sigma) noexcept {
    const double a = (lo - mu) / (sigma * std::sqrt(2.0));
    const double b = (hi - mu) / (sigma * std::sqrt(2.0));
    // Pick the tail form that avoids cancellation.
    if (a >= 0.0) return 0.5 * (std::erfc(a) - std::erfc(b));
    if (b <= 0.0) return 0.5 * (std::erfc(-b) - std::erfc(-a));
    return 1.0 - 0.5 * std::erfc(-a) - 0.5 * std::erfc(b);
}

std::vector<double> persistence_image(std::span<const Bar> bars, std::size_t rows, std::size_t cols, double sigma,
                                      const ImageBounds& bounds, const WeightFn& weight) {
    if (rows < 1 || cols < 1) throw ContractViolation("image needs at least one row and column");
    if (!(sigma > 0.0)) throw ContractViolation("image sigma must be positive");
    if (!(bounds.birth_min < bounds.birth_max) || !(bounds.pers_min < bounds.pers_max))
        throw ContractViolation("image bounds are empty");
    std::vector<double> img(rows * cols, 0.0);
    const double bw = (bounds.birth_max - bounds.birth_min) / static_cast<double>(cols);
    const double ph = (bounds.pers_max - bounds.pers_min) / static_cast<double>(rows);
    std::vector<double> along_birth(cols), along_pers(rows);
    for (const auto& bar : bars) {
        double w = weight(bar);
        if (w == 0.0) continue;
        const double pers = bar.persistence();
        for (std::size_t c = 0; c < cols; ++c) {
            double lo = bounds.birth_min + static_cast<double>(c) * bw;
            along_birth[c] = gaussian_mass(lo, lo + bw, bar.birth, sigma);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            double lo = bounds.pers_min + static_cast<double>(r) * ph;
            along_pers[r] = gaussian_mass(lo, lo + ph, pers, sigma);
        }
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) img[r * cols + c] += w * along_pers[r] * along_birth[c];
    }
    return img;
}

std::string to_string(VectorizationKind kind) {
    switch (kind) {
    case VectorizationKind::Landscape: return "landscape";
    case VectorizationKind::Silhouette: return "silhouette";
    case VectorizationKind::BettiZigzag: return "betti";
    case VectorizationKind::BettiFast: return "betti-fast";
    case VectorizationKind::Entropy: return "entropy";
    case VectorizationKind::Image: return "image";
    }
    return "unknown";
}

VectorizationKind parse_vectorization_kind(std::string_view name) {
    for (auto k : {VectorizationKind::Landscape, VectorizationKind::Silhouette, VectorizationKind::BettiZigzag,
                   VectorizationKind::BettiFast, VectorizationKind::Entropy, VectorizationKind::Image})
        if (name == to_string(k)) return k;
    throw ValidationError("unknown vectorization '" + std::string(name) + "'");
}

}  // namespace tmpfp
