#include "tmpfp/plot.hpp"

#include "tmpfp/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace tmpfp {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

// Blue (low) to red (high); a flat range maps to the low color.
std::string color(double v, double lo, double hi) {
    double x = hi > lo ? (v - lo) / (hi - lo) : 0.0;
    x = std::clamp(x, 0.0, 1.0);
    int r = static_cast<int>(std::lround(40 + 215 * x));
    int g = static_cast<int>(std::lround(60 + 80 * (1.0 - std::abs(2.0 * x - 1.0))));
    int b = static_cast<int>(std::lround(200 - 170 * x));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

void open_svg(std::ostream& out, double w, double h, const std::string& title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string kind_of(const TmpTensor& t) {
    const auto& m = t.metadata();
    if (m.is_object() && m.contains("vectorization") && m.at("vectorization").is_string())
        return m.at("vectorization").get<std::string>();
    return "tensor";
}

void heatmap(std::ostream& out, std::span<const double> values, std::size_t rows, std::size_t cols, double x0,
             double y0, double cell_w, double cell_h, double lo, double hi) {
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            // Row 0 is drawn at the bottom.
            double y = y0 + static_cast<double>(rows - 1 - r) * cell_h;
            out << "<rect x=\"" << num(x0 + static_cast<double>(c) * cell_w) << "\" y=\"" << num(y)
                << "\" width=\"" << num(cell_w) << "\" height=\"" << num(cell_h) << "\" fill=\""
                << color(values[r * cols + c], lo, hi) << "\"/>\n";
        }
    }
}

}  // namespace

void write_tensor_csv(std::ostream& out, const TmpTensor& t) {
    const auto& shape = t.shape();
    if (shape.size() == 2) {
        for (std::size_t j = 0; j < shape[0]; ++j) {
            auto s = t.slice(j);
            for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << format_real(s[i]);
            out << '\n';
        }
        return;
    }
    for (std::size_t a = 0; a < shape.size(); ++a) out << 'i' << a << ',';
    out << "value\n";
    std::vector<std::size_t> idx(shape.size(), 0);
    for (double v : t.data()) {
        for (auto i : idx) out << i << ',';
        out << format_real(v) << '\n';
        for (std::size_t a = shape.size(); a-- > 0;) {
            if (++idx[a] < shape[a]) break;
            idx[a] = 0;
        }
    }
}

void write_tensor_svg(std::ostream& out, const TmpTensor& t) {
    const std::string kind = kind_of(t);
    const auto& shape = t.shape();
    double lo = 0.0, hi = 0.0;
    if (!t.data().empty()) {
        auto [a, b] = std::minmax_element(t.data().begin(), t.data().end());
        lo = *a;
        hi = *b;
    }
    const double margin = 40.0;

    if (shape.size() == 2 && (kind == "betti" || kind == "betti-fast")) {
        const double w = 640.0, h = 360.0;
        open_svg(out, w + 2 * margin, h + 2 * margin, escape(kind));
        const std::size_t n = shape[1];
        const double top = std::max(hi, 1.0);
        const double dx = w / static_cast<double>(std::max<std::size_t>(n, 1));
        out << "<line x1=\"" << num(margin) << "\" y1=\"" << num(margin + h) << "\" x2=\"" << num(margin + w)
            << "\" y2=\"" << num(margin + h) << "\" stroke=\"black\"/>\n";
        for (std::size_t j = 0; j < shape[0]; ++j) {
            auto s = t.slice(j);
            out << "<polyline fill=\"none\" stroke=\""
                << color(static_cast<double>(j), 0.0, static_cast<double>(shape[0] - 1)) << "\" points=\"";
            for (std::size_t i = 0; i < n; ++i) {
                double y = margin + h - s[i] / top * h;
                out << num(margin + static_cast<double>(i) * dx) << ',' << num(y) << ' '
                    << num(margin + static_cast<double>(i + 1) * dx) << ',' << num(y) << ' ';
            }
            out << "\"/>\n";
        }
        out << "</svg>\n";
        return;
    }

    if (shape.size() == 2) {
        const double w = 640.0, h = 360.0;
        open_svg(out, w + 2 * margin, h + 2 * margin, escape(kind));
        heatmap(out, t.data(), shape[0], shape[1], margin, margin, w / shape[1], h / shape[0], lo, hi);
        out << "</svg>\n";
        return;
    }

    if (shape.size() == 3) {
        const std::size_t m = shape[0];
        const auto per_row = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(m))));
        const std::size_t tile_rows = (m + per_row - 1) / per_row;
        const double tile = 160.0, gap = 10.0;
        open_svg(out, 2 * margin + static_cast<double>(per_row) * (tile + gap),
                 2 * margin + static_cast<double>(tile_rows) * (tile + gap), escape(kind));
        for (std::size_t j = 0; j < m; ++j) {
            double x0 = margin + static_cast<double>(j % per_row) * (tile + gap);
            double y0 = margin + static_cast<double>(j / per_row) * (tile + gap);
            heatmap(out, t.slice(j), shape[1], shape[2], x0, y0, tile / shape[2], tile / shape[1], lo, hi);
        }
        out << "</svg>\n";
        return;
    }
    throw ValidationError("only rank-2 and rank-3 tensors can be plotted");
}

void write_diagram_csv(std::ostream& out, const DiagramTable& table) { write_diagram_table(out, table); }

void write_diagram_svg(std::ostream& out, const DiagramTable& table) {
    const double margin = 40.0, w = 640.0, row = 6.0;
    const double h = std::max(1.0, static_cast<double>(table.records.size())) * row;
    open_svg(out, w + 2 * margin, h + 2 * margin, "barcode");
    const double t_max = std::max<double>(1.0, static_cast<double>(table.snapshots));
    auto x = [&](double t) { return margin + (t_max > 1.0 ? (t - 1.0) / (t_max - 1.0) : 0.5) * w; };
    for (std::size_t i = 0; i < table.records.size(); ++i) {
        const auto& r = table.records[i];
        double y = margin + static_cast<double>(i) * row + row / 2;
        double x1 = x(r.birth), x2 = std::max(x(r.death), x1 + 2.0);
        out << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y)
            << "\" stroke=\"" << (r.dim == 0 ? "#1f5fbf" : "#c0392b") << "\" stroke-width=\"3\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace tmpfp
