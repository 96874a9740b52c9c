#include "tmpfp/filtration.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>

namespace tmpfp {

bool is_node_valued(FilterKind kind) noexcept {
    return kind == FilterKind::Degree || kind == FilterKind::Closeness || kind == FilterKind::Betweenness;
}

std::string to_string(FilterKind kind) {
    switch (kind) {
    case FilterKind::Degree: return "degree";
    case FilterKind::Closeness: return "closeness";
    case FilterKind::Betweenness: return "betweenness";
    case FilterKind::EdgeWeightSublevel: return "edge-weight";
    case FilterKind::PowerGeodesic: return "power";
    }
    return "unknown";
}

std::string to_string(Orientation o) { return o == Orientation::Sublevel ? "sublevel" : "superlevel"; }

FilterKind parse_filter_kind(std::string_view name) {
    if (name == "degree") return FilterKind::Degree;
    if (name == "closeness") return FilterKind::Closeness;
    if (name == "betweenness") return FilterKind::Betweenness;
    if (name == "edge-weight") return FilterKind::EdgeWeightSublevel;
    if (name == "power") return FilterKind::PowerGeodesic;
    throw ValidationError("unknown filter kind '" + std::string(name) + "'");
}

Orientation parse_orientation(std::string_view name) {
    if (name == "sublevel") return Orientation::Sublevel;
    if (name == "superlevel") return Orientation::Superlevel;
    throw ValidationError("unknown orientation '" + std::string(name) + "'");
}

ThresholdGrid explicit_grid(std::vector<double> values) {
    if (values.empty()) throw ValidationError("threshold grid is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) throw ValidationError("threshold grid has a non-finite value");
        if (i > 0 && !(values[i - 1] < values[i])) throw ValidationError("threshold grid must be strictly increasing");
    }
    ThresholdGrid g;
    g.requested = values.size();
    g.values = std::move(values);
    g.rule = "explicit";
    return g;
}

namespace {

// Adjacency over local indices in label order.
struct IndexedGraph {
    std::vector<NodeId> labels;
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;

    explicit IndexedGraph(const Snapshot& g) : labels(g.nodes().begin(), g.nodes().end()), adj(labels.size()) {
        for (const auto& [e, w] : g.edges()) {
            auto u = index(e.u), v = index(e.v);
            adj[u].emplace_back(v, w);
            adj[v].emplace_back(u, w);
        }
    }
    std::size_t index(const NodeId& n) const {
        return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), n) - labels.begin());
    }
    std::size_t size() const { return labels.size(); }
};

std::vector<long> bfs_hops(const IndexedGraph& g, std::size_t src) {
    std::vector<long> dist(g.size(), -1);
    std::deque<std::size_t> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto [v, w] : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<double> betweenness(const IndexedGraph& g) {
    const std::size_t n = g.size();
    std::vector<double> cb(n, 0.0);
    std::vector<std::vector<std::size_t>> pred(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<long> dist(n);
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < n; ++s) {
        for (auto& p : pred) p.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        order.clear();
        sigma[s] = 1.0;
        dist[s] = 0;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            auto v = q.front();
            q.pop_front();
            order.push_back(v);
            for (auto [w, unused] : g.adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto w = *it;
            for (auto v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) cb[w] += delta[w];
        }
    }
    // Each unordered pair was counted from both endpoints.
    for (auto& c : cb) c /= 2.0;
    return cb;
}

std::vector<double> dijkstra(const IndexedGraph& g, std::size_t src) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.size(), inf);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0.0;
    pq.emplace(0.0, src);
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (auto [v, w] : g.adj[u]) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                pq.emplace(dist[v], v);
            }
        }
    }
    return dist;
}

bool passes(double value, double alpha, Orientation o) {
    return o == Orientation::Sublevel ? value <= alpha : value >= alpha;
}

Snapshot keep_nodes_by_value(const Snapshot& g, const std::map<NodeId, double>& values, double alpha, Orientation o) {
    std::set<NodeId> keep;
    for (const auto& [n, v] : values)
        if (passes(v, alpha, o)) keep.insert(n);
    return induced_subgraph(g, keep);
}

Snapshot keep_edges_by_value(const Snapshot& g, const std::map<Edge, double>& values, double alpha, Orientation o) {
    Snapshot out(g.timestamp());
    for (const auto& n : g.nodes()) out.add_node(n);
    for (const auto& [e, v] : values)
        if (passes(v, alpha, o)) out.set_edge(e.u, e.v, v);
    return out;
}

}  // namespace

std::map<NodeId, double> node_filter_values(const Snapshot& g, FilterKind kind) {
    if (!is_node_valued(kind)) throw ContractViolation("node_filter_values needs a node-valued filter kind");
    IndexedGraph ig(g);
    std::map<NodeId, double> out;
    switch (kind) {
    case FilterKind::Degree:
        for (const auto& n : g.nodes()) out[n] = 0.0;
        for (const auto& [e, w] : g.edges()) {
            out[e.u] += w;
            out[e.v] += w;
        }
        break;
    case FilterKind::Closeness:
        for (std::size_t u = 0; u < ig.size(); ++u) {
            auto dist = bfs_hops(ig, u);
            long reached = 0, total = 0;
            for (long d : dist) {
                if (d >= 0) {
                    ++reached;
                    total += d;
                }
            }
            out[ig.labels[u]] = total > 0 ? static_cast<double>(reached - 1) / static_cast<double>(total) : 0.0;
        }
        break;
    case FilterKind::Betweenness: {
        auto cb = betweenness(ig);
        for (std::size_t u = 0; u < ig.size(); ++u) out[ig.labels[u]] = cb[u];
        break;
    }
    default: break;
    }
    return out;
}

ThresholdGrid quantile_thresholds(std::span<const double> values, std::size_t m) {
    if (values.empty()) throw ValidationError("cannot choose thresholds from an empty value set");
    if (m < 1) throw ValidationError("resolution must be at least 1");
    std::vector<double> sorted(values.begin(), values.end());
    for (double v : sorted)
        if (!std::isfinite(v)) throw ValidationError("filter values must be finite");
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    ThresholdGrid grid;
    grid.requested = m;
    grid.rule = "quantile-linear:" + std::to_string(m);
    for (std::size_t j = 1; j <= m; ++j) {
        double h = static_cast<double>(n - 1) * static_cast<double>(j) / static_cast<double>(m);
        auto lo = static_cast<std::size_t>(std::floor(h));
        double a = sorted[std::min(lo, n - 1)];
        double q = a;
        if (lo + 1 < n) q = a + (h - static_cast<double>(lo)) * (sorted[lo + 1] - a);
        if (j == m) q = sorted.back();
        if (grid.values.empty() || q > grid.values.back()) grid.values.push_back(q);
    }
    return grid;
}

std::map<Edge, double> geodesic_distances(const Snapshot& g) {
    IndexedGraph ig(g);
    std::map<Edge, double> out;
    for (std::size_t u = 0; u < ig.size(); ++u) {
        auto dist = dijkstra(ig, u);
        for (std::size_t v = u + 1; v < ig.size(); ++v)
            if (std::isfinite(dist[v])) out.emplace(Edge{ig.labels[u], ig.labels[v]}, dist[v]);
    }
    return out;
}

std::vector<double> filter_value_pool(const TemporalGraph& tg, FilterKind kind) {
    std::vector<double> pool;
    for (const auto& s : tg.snapshots()) {
        if (is_node_valued(kind)) {
            for (const auto& [n, v] : node_filter_values(s, kind)) pool.push_back(v);
        } else if (kind == FilterKind::EdgeWeightSublevel) {
            for (const auto& [e, w] : s.edges()) pool.push_back(w);
        } else {
            for (const auto& [e, d] : geodesic_distances(s)) pool.push_back(d);
        }
    }
    return pool;
}

std::vector<SimplicialComplex> power_filtration_sequence(const Snapshot& g, const ThresholdGrid& grid, int maxdim) {
    auto dist = geodesic_distances(g);
    std::vector<SimplicialComplex> out;
    out.reserve(grid.resolution());
    for (double alpha : grid.values)
        out.push_back(clique_complex(keep_edges_by_value(g, dist, alpha, Orientation::Sublevel), maxdim));
    return out;
}

Snapshot filtered_subgraph(const Snapshot& g, const FilterSpec& filter, double alpha) {
    if (is_node_valued(filter.kind))
        return keep_nodes_by_value(g, node_filter_values(g, filter.kind), alpha, filter.orientation);
    if (filter.kind == FilterKind::EdgeWeightSublevel)
        return keep_edges_by_value(g, g.edges(), alpha, filter.orientation);
    return keep_edges_by_value(g, geodesic_distances(g), alpha, filter.orientation);
}

Bifiltration::Bifiltration(ThresholdGrid grid, FilterSpec filter, int maxdim,
                           std::vector<std::vector<Snapshot>> graphs,
                           std::vector<std::vector<SimplicialComplex>> cells)
    : grid_(std::move(grid)), filter_(filter), maxdim_(maxdim), graphs_(std::move(graphs)), cells_(std::move(cells)) {
    if (graphs_.size() != cells_.size()) throw ContractViolation("bifiltration graph/cell grids differ");
}

const Snapshot& Bifiltration::graph(std::size_t j, std::size_t t) const {
    if (j < 1 || j > levels() || t < 1 || t > length()) throw ContractViolation("bifiltration index out of range");
    return graphs_[j - 1][t - 1];
}

const SimplicialComplex& Bifiltration::cell(std::size_t j, std::size_t t) const {
    if (j < 1 || j > levels() || t < 1 || t > length()) throw ContractViolation("bifiltration index out of range");
    return cells_[j - 1][t - 1];
}

const std::vector<Snapshot>& Bifiltration::slice_graphs(std::size_t j) const {
    if (j < 1 || j > levels()) throw ContractViolation("bifiltration level out of range");
    return graphs_[j - 1];
}

const std::vector<SimplicialComplex>& Bifiltration::slice(std::size_t j) const {
    if (j < 1 || j > levels()) throw ContractViolation("bifiltration level out of range");
    return cells_[j - 1];
}

Bifiltration sublevel_bifiltration(const TemporalGraph& tg, const FilterSpec& filter, const ThresholdGrid& grid,
                                   int maxdim) {
    if (grid.values.empty()) throw ValidationError("threshold grid is empty");
    const std::size_t m = grid.resolution();
    const std::size_t T = tg.length();
    auto alpha_at = [&](std::size_t j) {  // 0-based level
        return filter.orientation == Orientation::Sublevel ? grid.values[j] : grid.values[m - 1 - j];
    };

    std::vector<std::vector<Snapshot>> graphs(m, std::vector<Snapshot>(T));
    std::vector<std::vector<SimplicialComplex>> cells(m, std::vector<SimplicialComplex>(T, SimplicialComplex(maxdim)));
    parallel_for(T, [&](std::size_t t) {
        const Snapshot& g = tg.snapshots()[t];
        std::map<NodeId, double> node_values;
        std::map<Edge, double> edge_values;
        if (is_node_valued(filter.kind))
            node_values = node_filter_values(g, filter.kind);
        else if (filter.kind == FilterKind::EdgeWeightSublevel)
            edge_values = g.edges();
        else
            edge_values = geodesic_distances(g);
        for (std::size_t j = 0; j < m; ++j) {
            graphs[j][t] = is_node_valued(filter.kind)
                               ? keep_nodes_by_value(g, node_values, alpha_at(j), filter.orientation)
                               : keep_edges_by_value(g, edge_values, alpha_at(j), filter.orientation);
            cells[j][t] = clique_complex(graphs[j][t], maxdim);
        }
    });
    return Bifiltration(grid, filter, maxdim, std::move(graphs), std::move(cells));
}

std::size_t entry_level(double value, const ThresholdGrid& grid, Orientation o) {
    const auto& a = grid.values;
    if (o == Orientation::Sublevel) {
        auto it = std::lower_bound(a.begin(), a.end(), value);
        return it == a.end() ? 0 : static_cast<std::size_t>(it - a.begin()) + 1;
    }
    auto passing = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), value) - a.begin());
    return passing == 0 ? 0 : a.size() + 1 - passing;
}

std::vector<LeveledSimplex> entry_levels(const Snapshot& g, const FilterSpec& filter, const ThresholdGrid& grid,
                                         int maxdim) {
    std::vector<LeveledSimplex> out;
    if (is_node_valued(filter.kind)) {
        std::map<NodeId, std::size_t> level;
        std::set<NodeId> keep;
        for (const auto& [n, v] : node_filter_values(g, filter.kind)) {
            auto l = entry_level(v, grid, filter.orientation);
            if (l > 0) {
                level[n] = l;
                keep.insert(n);
            }
        }
        auto cx = clique_complex(induced_subgraph(g, keep), maxdim);
        out.reserve(cx.size());
        for (const auto& s : cx.simplices()) {
            std::size_t l = 0;
            for (const auto& v : s) l = std::max(l, level.at(v));
            out.push_back({s, l});
        }
        return out;
    }

    const auto values = filter.kind == FilterKind::EdgeWeightSublevel ? g.edges() : geodesic_distances(g);
    std::map<Edge, std::size_t> level;
    Snapshot top(g.timestamp());
    for (const auto& n : g.nodes()) top.add_node(n);
    for (const auto& [e, v] : values) {
        auto l = entry_level(v, grid, filter.orientation);
        if (l > 0) {
            level[e] = l;
            top.set_edge(e.u, e.v, v);
        }
    }
    auto cx = clique_complex(top, maxdim);
    out.reserve(cx.size());
    for (const auto& s : cx.simplices()) {
        std::size_t l = 1;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) l = std::max(l, level.at(Edge{s[a], s[b]}));
        out.push_back({s, l});
    }
    return out;
}

}  // namespace tmpfp
