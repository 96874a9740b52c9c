#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tmpfp {

/// Node identity. Two nodes are the same node iff their labels are equal,
/// regardless of the snapshot they appear in.
class NodeId {
public:
    NodeId() = default;
    explicit NodeId(std::string label) : label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

    friend bool operator==(const NodeId&, const NodeId&) = default;
    friend std::strong_ordering operator<=>(const NodeId& a, const NodeId& b) {
        return a.label_.compare(b.label_) <=> 0;
    }

private:
    std::string label_;
};

/// Unordered node pair stored with `u < v`.
struct Edge {
    NodeId u;
    NodeId v;

    /// Normalizes the endpoint order. Throws ValidationError on a self-loop.
    static Edge make(NodeId a, NodeId b);

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// One weighted undirected graph of a temporal sequence.
///
/// Every edge endpoint is a node of the snapshot, edge weights are strictly
/// positive and there are no self-loops. Absent edges have weight 0.
class Snapshot {
public:
    Snapshot() = default;
    explicit Snapshot(int timestamp) : timestamp_(timestamp) {}

    int timestamp() const noexcept { return timestamp_; }
    void set_timestamp(int t) noexcept { timestamp_ = t; }

    void add_node(const NodeId& n) { nodes_.insert(n); }
    /// Adds the edge (and its endpoints). Adds to any existing weight.
    void add_edge(const NodeId& a, const NodeId& b, double weight = 1.0);
    /// Sets the weight of an edge, replacing any previous weight.
    void set_edge(const NodeId& a, const NodeId& b, double weight);

    const std::set<NodeId>& nodes() const noexcept { return nodes_; }
    const std::map<Edge, double>& edges() const noexcept { return edges_; }

    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool has_node(const NodeId& n) const { return nodes_.contains(n); }
    bool has_edge(const NodeId& a, const NodeId& b) const;
    double weight(const NodeId& a, const NodeId& b) const;

    friend bool operator==(const Snapshot&, const Snapshot&) = default;

private:
    int timestamp_ = 1;
    std::set<NodeId> nodes_;
    std::map<Edge, double> edges_;
};

/// Snapshots with timestamps 1..T in order. T >= 1.
class TemporalGraph {
public:
    TemporalGraph() = default;
    /// Re-stamps the snapshots 1..T in the given order. Throws ValidationError when empty.
    explicit TemporalGraph(std::vector<Snapshot> snapshots, std::vector<double> raw_times = {});

    std::size_t length() const noexcept { return snapshots_.size(); }
    const Snapshot& at(std::size_t t) const;  // 1-based
    const std::vector<Snapshot>& snapshots() const noexcept { return snapshots_; }
    /// Raw time value each snapshot came from, when ingested from a file.
    const std::vector<double>& raw_times() const noexcept { return raw_times_; }

    /// All node labels that appear at any time, sorted.
    std::set<NodeId> node_universe() const;

    friend bool operator==(const TemporalGraph& a, const TemporalGraph& b) {
        return a.snapshots_ == b.snapshots_;
    }

private:
    std::vector<Snapshot> snapshots_;
    std::vector<double> raw_times_;
};

/// Column names of an edge-list CSV. A missing weight column means unit weights.
struct EdgeListSchema {
    std::string time = "time";
    std::string source = "source";
    std::string target = "target";
    std::optional<std::string> weight = std::string("weight");

    friend bool operator==(const EdgeListSchema&, const EdgeListSchema&) = default;
};

/// Reads a CSV edge list with a header row. Lines starting with '#' are comments.
/// Distinct raw times are re-indexed to 1..T in increasing order; duplicate
/// (t, u, v) records sum their weights.
TemporalGraph parse_temporal_edge_list(std::istream& in, const EdgeListSchema& schema = {});

/// Node and edge union. Shared edges keep the larger weight.
Snapshot union_graph(const Snapshot& g1, const Snapshot& g2);

/// Subgraph induced by `keep ∩ nodes(g)`.
Snapshot induced_subgraph(const Snapshot& g, const std::set<NodeId>& keep);

/// Windows [t, t+width-1] for t = 1, 1+stride, ... each re-indexed to 1..width.
std::vector<TemporalGraph> window(const TemporalGraph& tg, std::size_t width, std::size_t stride);

/// Keeps the `n` nodes with the largest total incident weight over all
/// snapshots (ties broken by label) and restricts every snapshot to them.
TemporalGraph select_active_nodes(const TemporalGraph& tg, std::size_t n);

}  // namespace tmpfp
