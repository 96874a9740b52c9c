#include "tmpfp/io.hpp"

#include "tmpfp/error.hpp"
#include "tmpfp/vectorization.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace tmpfp {

namespace {

template <typename U>
void put_le(std::ostream& out, U v) {
    char bytes[sizeof(U)];
    for (std::size_t i = 0; i < sizeof(U); ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(bytes, sizeof(U));
}

template <typename U>
U get_le(std::istream& in) {
    unsigned char bytes[sizeof(U)];
    if (!in.read(reinterpret_cast<char*>(bytes), sizeof(U))) throw ValidationError("tensor file is truncated");
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(bytes[i]) << (8 * i);
    return v;
}

std::string csv_field(const std::string& s) {
    if (!s.empty() && s.find_first_of(",\"\r\n") == std::string::npos && s.front() != ' ' && s.back() != ' ')
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw ComputationError("cannot format number");
    return std::string(buf, ptr);
}

void write_tensor(std::ostream& out, const TmpTensor& t) {
    if (t.rank() > 255) throw ContractViolation("tensor rank exceeds the file format");
    out.write("TMPT", 4);
    put_le<std::uint32_t>(out, kTensorFormatVersion);
    put_le<std::uint8_t>(out, static_cast<std::uint8_t>(t.rank()));
    for (auto e : t.shape()) put_le<std::uint32_t>(out, e);
    for (double v : t.data()) put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(v));
    const std::string meta = t.metadata().is_null() ? std::string("{}") : t.metadata().dump();
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(meta.size()));
    out.write(meta.data(), static_cast<std::streamsize>(meta.size()));
}

TmpTensor read_tensor(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::string(magic, 4) != "TMPT") throw ValidationError("not a tensor file");
    if (get_le<std::uint32_t>(in) != kTensorFormatVersion) throw ValidationError("unsupported tensor file version");
    const auto rank = get_le<std::uint8_t>(in);
    if (rank == 0) throw ValidationError("tensor file has rank 0");
    std::vector<std::uint32_t> shape(rank);
    std::size_t count = 1;
    for (auto& e : shape) {
        e = get_le<std::uint32_t>(in);
        count *= e;
    }
    std::vector<double> data(count);
    for (auto& v : data) v = std::bit_cast<double>(get_le<std::uint64_t>(in));
    const auto len = get_le<std::uint32_t>(in);
    std::string meta(len, '\0');
    if (len > 0 && !in.read(meta.data(), len)) throw ValidationError("tensor metadata is truncated");
    if (in.peek() != std::char_traits<char>::eof()) throw ValidationError("trailing bytes after tensor metadata");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(meta);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("tensor metadata is not JSON: ") + e.what());
    }
    return TmpTensor(std::move(shape), std::move(data), std::move(j));
}

void write_tensor_file(const std::string& path, const TmpTensor& t) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw ValidationError("cannot write '" + path + "'");
        write_tensor(out, t);
        if (!out) throw ValidationError("write failed for '" + path + "'");
    }
    std::ofstream side(path + ".json");
    if (!side) throw ValidationError("cannot write '" + path + ".json'");
    nlohmann::json j{{"shape", t.shape()}, {"metadata", t.metadata()}, {"format_version", kTensorFormatVersion}};
    side << j.dump(2) << '\n';
}

TmpTensor read_tensor_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return read_tensor(in);
}

void write_temporal_edge_list(std::ostream& out, const TemporalGraph& tg) {
    out << "time,source,target,weight\n";
    for (const auto& s : tg.snapshots()) {
        const std::string t = std::to_string(s.timestamp());
        std::set<NodeId> covered;
        for (const auto& [e, w] : s.edges()) {
            out << t << ',' << csv_field(e.u.label()) << ',' << csv_field(e.v.label()) << ',' << format_real(w)
                << '\n';
            covered.insert(e.u);
            covered.insert(e.v);
        }
        for (const auto& n : s.nodes())
            if (!covered.contains(n)) out << t << ',' << csv_field(n.label()) << ',' << csv_field(n.label()) << ",0\n";
    }
}

DiagramTable diagram_table(const std::vector<std::vector<ZigzagDiagram>>& diagrams, const std::vector<int>& dims,
                           std::size_t snapshots) {
    DiagramTable table;
    table.snapshots = snapshots;
    table.slices = diagrams.size();
    for (std::size_t j = 0; j < diagrams.size(); ++j) {
        for (int k : dims) {
            const auto& pd = diagrams[j].at(static_cast<std::size_t>(k));
            for (const auto& b : pd.bars)
                table.records.push_back(
                    {j + 1, k, ZigzagIndex(b.birth).time(), ZigzagIndex(b.death).time(), b.right_open});
        }
    }
    return table;
}

void write_diagram_table(std::ostream& out, const DiagramTable& table) {
    out << "# snapshots=" << table.snapshots << " slices=" << table.slices << '\n';
    out << "slice,dim,birth,death,right_open\n";
    for (const auto& r : table.records)
        out << r.slice << ',' << r.dim << ',' << format_real(r.birth) << ',' << format_real(r.death) << ','
            << (r.right_open ? 1 : 0) << '\n';
}

DiagramTable read_diagram_table(std::istream& in) {
    DiagramTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_meta = false, have_header = false;
    auto number = [&](std::string_view text, auto& value) {
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size())
            throw IngestionError(line_no, "bad number '" + std::string(text) + "'");
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::istringstream ss(line.substr(1));
            std::string tok;
            while (ss >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                auto key = tok.substr(0, eq);
                auto val = std::string_view(tok).substr(eq + 1);
                if (key == "snapshots") number(val, table.snapshots);
                if (key == "slices") number(val, table.slices);
            }
            have_meta = true;
            continue;
        }
        if (!have_header) {
            if (line != "slice,dim,birth,death,right_open") throw IngestionError(line_no, "unexpected diagram header");
            have_header = true;
            continue;
        }
        std::vector<std::string_view> f;
        std::string_view rest(line);
        for (;;) {
            auto c = rest.find(',');
            f.push_back(rest.substr(0, c));
            if (c == std::string_view::npos) break;
            rest.remove_prefix(c + 1);
        }
        if (f.size() != 5) throw IngestionError(line_no, "expected 5 fields");
        DiagramRecord r{};
        number(f[0], r.slice);
        number(f[1], r.dim);
        number(f[2], r.birth);
        number(f[3], r.death);
        int open = 0;
        number(f[4], open);
        if (open != 0 && open != 1) throw IngestionError(line_no, "right_open must be 0 or 1");
        r.right_open = open == 1;
        table.records.push_back(r);
    }
    if (!have_meta || !have_header) throw ValidationError("diagram file lacks its header");
    return table;
}

}  // namespace tmpfp
