#pragma once

#include "tmpfp/graph.hpp"
#include "tmpfp/tensor.hpp"
#include "tmpfp/zigzag.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace tmpfp {

/// Binary tensor layout, all integers little-endian:
///   "TMPT" | u32 version = 1 | u8 rank | rank × u32 extents |
///   f64 payload, row-major | u32 byte length | UTF-8 JSON metadata
inline constexpr std::uint32_t kTensorFormatVersion = 1;

void write_tensor(std::ostream& out, const TmpTensor& t);
/// Throws ValidationError on a malformed or truncated stream.
TmpTensor read_tensor(std::istream& in);

/// Writes the tensor and a `<path>.json` sidecar with shape and metadata.
void write_tensor_file(const std::string& path, const TmpTensor& t);
TmpTensor read_tensor_file(const std::string& path);

/// CSV edge list with header `time,source,target,weight`. Nodes without edges
/// are written as zero-weight self-loops so the reader keeps them.
void write_temporal_edge_list(std::ostream& out, const TemporalGraph& tg);

/// One interval of a diagram dump, in time units.
struct DiagramRecord {
    std::size_t slice;
    int dim;
    double birth;
    double death;
    bool right_open;

    friend bool operator==(const DiagramRecord&, const DiagramRecord&) = default;
};

struct DiagramTable {
    std::size_t snapshots = 0;
    std::size_t slices = 0;
    std::vector<DiagramRecord> records;

    friend bool operator==(const DiagramTable&, const DiagramTable&) = default;
};

/// Records of diagrams indexed [j-1][k], keeping only dimensions in `dims`.
DiagramTable diagram_table(const std::vector<std::vector<ZigzagDiagram>>& diagrams, const std::vector<int>& dims,
                           std::size_t snapshots);

/// Text dump: a `# snapshots=T slices=m` line, the header
/// `slice,dim,birth,death,right_open`, then one row per interval.
void write_diagram_table(std::ostream& out, const DiagramTable& table);
DiagramTable read_diagram_table(std::istream& in);

/// Shortest decimal text that reads back to the same double.
std::string format_real(double v);

}  // namespace tmpfp
