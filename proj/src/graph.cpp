#include "tmpfp/graph.hpp"

#include "tmpfp/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <unordered_map>

namespace tmpfp {

Edge Edge::make(NodeId a, NodeId b) {
    if (a == b) throw ValidationError("self-loop on node '" + a.label() + "'");
    if (b < a) std::swap(a, b);
    return Edge{std::move(a), std::move(b)};
}

void Snapshot::add_edge(const NodeId& a, const NodeId& b, double weight) {
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw ValidationError("edge weight must be positive and finite");
    nodes_.insert(a);
    nodes_.insert(b);
    edges_[Edge::make(a, b)] += weight;
}

void Snapshot::set_edge(const NodeId& a, const NodeId& b, double weight) {
    if (!(weight > 0.0) || !std::isfinite(weight))
        throw ValidationError("edge weight must be positive and finite");
    nodes_.insert(a);
    nodes_.insert(b);
    edges_[Edge::make(a, b)] = weight;
}

bool Snapshot::has_edge(const NodeId& a, const NodeId& b) const {
    if (a == b) return false;
    return edges_.contains(Edge::make(a, b));
}

double Snapshot::weight(const NodeId& a, const NodeId& b) const {
    if (a == b) return 0.0;
    auto it = edges_.find(Edge::make(a, b));
    return it == edges_.end() ? 0.0 : it->second;
}

TemporalGraph::TemporalGraph(std::vector<Snapshot> snapshots, std::vector<double> raw_times)
    : snapshots_(std::move(snapshots)), raw_times_(std::move(raw_times)) {
    if (snapshots_.empty()) throw ValidationError("temporal graph needs at least one snapshot");
    if (!raw_times_.empty() && raw_times_.size() != snapshots_.size())
        throw ValidationError("raw time count does not match snapshot count");
    for (std::size_t i = 0; i < snapshots_.size(); ++i) snapshots_[i].set_timestamp(static_cast<int>(i + 1));
}

const Snapshot& TemporalGraph::at(std::size_t t) const {
    if (t < 1 || t > snapshots_.size()) throw ContractViolation("snapshot index out of range");
    return snapshots_[t - 1];
}

std::set<NodeId> TemporalGraph::node_universe() const {
    std::set<NodeId> all;
    for (const auto& s : snapshots_) all.insert(s.nodes().begin(), s.nodes().end());
    return all;
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// RFC 4180 style field splitting; quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && trim(cur).empty()) {
            quoted = true;
            was_quoted = true;
            cur.clear();
        } else if (c == ',') {
            fields.push_back(was_quoted ? cur : trim(cur));
            cur.clear();
            was_quoted = false;
        } else {
            cur.push_back(c);
        }
    }
    if (quoted) throw IngestionError(line_no, "unterminated quoted field");
    fields.push_back(was_quoted ? cur : trim(cur));
    return fields;
}

std::optional<double> parse_number(const std::string& s) {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
    return v;
}

struct Record {
    double time;
    NodeId u;
    NodeId v;
    double weight;
};

}  // namespace

TemporalGraph parse_temporal_edge_list(std::istream& in, const EdgeListSchema& schema) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    bool have_header = false;
    std::vector<Record> records;
    std::size_t time_col = 0, src_col = 0, dst_col = 0;
    std::optional<std::size_t> weight_col;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        auto fields = split_csv(line, line_no);
        if (!have_header) {
            header = std::move(fields);
            auto find = [&](const std::string& name) -> std::optional<std::size_t> {
                auto it = std::find(header.begin(), header.end(), name);
                if (it == header.end()) return std::nullopt;
                return static_cast<std::size_t>(it - header.begin());
            };
            auto require = [&](const std::string& name) {
                auto idx = find(name);
                if (!idx) throw IngestionError(line_no, "header lacks required column '" + name + "'");
                return *idx;
            };
            time_col = require(schema.time);
            src_col = require(schema.source);
            dst_col = require(schema.target);
            if (schema.weight) weight_col = find(*schema.weight);
            have_header = true;
            continue;
        }

        if (fields.size() != header.size())
            throw IngestionError(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                                              std::to_string(fields.size()));
        auto t = parse_number(fields[time_col]);
        if (!t) throw IngestionError(line_no, "non-numeric time '" + fields[time_col] + "'");
        double w = 1.0;
        if (weight_col) {
            auto pw = parse_number(fields[*weight_col]);
            if (!pw) throw IngestionError(line_no, "non-numeric weight '" + fields[*weight_col] + "'");
            if (*pw < 0.0) throw ValidationError("line " + std::to_string(line_no) + ": negative weight");
            w = *pw;
        }
        if (fields[src_col].empty() || fields[dst_col].empty())
            throw IngestionError(line_no, "empty node label");
        records.push_back({*t, NodeId(fields[src_col]), NodeId(fields[dst_col]), w});
    }

    if (records.empty()) throw ValidationError("empty input");

    std::vector<double> times;
    times.reserve(records.size());
    for (const auto& r : records) times.push_back(r.time);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    std::vector<Snapshot> snaps(times.size());
    for (const auto& r : records) {
        auto idx = static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), r.time) - times.begin());
        Snapshot& s = snaps[idx];
        s.add_node(r.u);
        s.add_node(r.v);
        // Self-loops and zero weights register the nodes but create no edge.
        if (r.u == r.v || r.weight == 0.0) continue;
        s.add_edge(r.u, r.v, r.weight);
    }
    return TemporalGraph(std::move(snaps), std::move(times));
}

Snapshot union_graph(const Snapshot& g1, const Snapshot& g2) {
    Snapshot out(std::min(g1.timestamp(), g2.timestamp()));
    for (const auto& n : g1.nodes()) out.add_node(n);
    for (const auto& n : g2.nodes()) out.add_node(n);
    for (const auto& [e, w] : g1.edges()) out.set_edge(e.u, e.v, w);
    for (const auto& [e, w] : g2.edges()) out.set_edge(e.u, e.v, std::max(w, g1.weight(e.u, e.v)));
    return out;
}

Snapshot induced_subgraph(const Snapshot& g, const std::set<NodeId>& keep) {
    Snapshot out(g.timestamp());
    for (const auto& n : g.nodes())
        if (keep.contains(n)) out.add_node(n);
    for (const auto& [e, w] : g.edges())
        if (keep.contains(e.u) && keep.contains(e.v)) out.set_edge(e.u, e.v, w);
    return out;
}

std::vector<TemporalGraph> window(const TemporalGraph& tg, std::size_t width, std::size_t stride) {
    const std::size_t T = tg.length();
    if (width < 1 || width > T)
        throw ValidationError("window width " + std::to_string(width) + " outside 1.." + std::to_string(T));
    if (stride < 1) throw ValidationError("window stride must be at least 1");
    std::vector<TemporalGraph> out;
    for (std::size_t start = 0; start + width <= T; start += stride) {
        std::vector<Snapshot> snaps(tg.snapshots().begin() + static_cast<std::ptrdiff_t>(start),
                                    tg.snapshots().begin() + static_cast<std::ptrdiff_t>(start + width));
        std::vector<double> raw;
        if (!tg.raw_times().empty())
            raw.assign(tg.raw_times().begin() + static_cast<std::ptrdiff_t>(start),
                       tg.raw_times().begin() + static_cast<std::ptrdiff_t>(start + width));
        out.emplace_back(std::move(snaps), std::move(raw));
    }
    return out;
}

TemporalGraph select_active_nodes(const TemporalGraph& tg, std::size_t n) {
    std::map<NodeId, double> activity;
    for (const auto& s : tg.snapshots()) {
        for (const auto& node : s.nodes()) activity.try_emplace(node, 0.0);
        for (const auto& [e, w] : s.edges()) {
            activity[e.u] += w;
            activity[e.v] += w;
        }
    }
    std::vector<std::pair<NodeId, double>> ranked(activity.begin(), activity.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::set<NodeId> keep;
    for (std::size_t i = 0; i < ranked.size() && i < n; ++i) keep.insert(ranked[i].first);

    std::vector<Snapshot> snaps;
    snaps.reserve(tg.length());
    for (const auto& s : tg.snapshots()) snaps.push_back(induced_subgraph(s, keep));
    return TemporalGraph(std::move(snaps), tg.raw_times());
}

}  // namespace tmpfp
