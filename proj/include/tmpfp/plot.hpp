#pragma once

#include "tmpfp/io.hpp"
#include "tmpfp/tensor.hpp"

#include <iosfwd>

namespace tmpfp {

/// Rank-2 tensors become one CSV row per slice; higher ranks are written in
/// long form with one index column per axis and a `value` column.
void write_tensor_csv(std::ostream& out, const TmpTensor& t);

/// Betti tensors are drawn as step curves (one per slice); other rank-2
/// tensors as a slice × grid heatmap; rank-3 tensors as a mosaic of heatmaps.
void write_tensor_svg(std::ostream& out, const TmpTensor& t);

/// Barcode of a diagram dump, one row per interval, grouped by slice and dim.
void write_diagram_svg(std::ostream& out, const DiagramTable& table);

/// The dump itself, as CSV rows.
void write_diagram_csv(std::ostream& out, const DiagramTable& table);

}  // namespace tmpfp
