#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tmpfp {

/// Dense row-major real tensor with JSON metadata.
class TmpTensor {
public:
    TmpTensor() = default;
    TmpTensor(std::vector<std::uint32_t> shape, std::vector<double> data, nlohmann::json metadata = {});

    const std::vector<std::uint32_t>& shape() const noexcept { return shape_; }
    std::size_t rank() const noexcept { return shape_.size(); }
    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }
    const nlohmann::json& metadata() const noexcept { return metadata_; }
    nlohmann::json& metadata() noexcept { return metadata_; }

    /// Number of entries in one slice along axis 0.
    std::size_t slice_size() const;
    /// Entries of slice j (0-based) along axis 0.
    std::span<const double> slice(std::size_t j) const;

    friend bool operator==(const TmpTensor&, const TmpTensor&) = default;

private:
    std::vector<std::uint32_t> shape_;
    std::vector<double> data_;
    nlohmann::json metadata_;
};

/// Per-slice output of a vectorization: its shape and row-major values.
struct SliceVector {
    std::vector<std::uint32_t> shape;
    std::vector<double> values;
};

/// Stacks slices along a new axis 0. Throws ComputationError when the slice
/// shapes differ or a value is not finite.
TmpTensor assemble_tmp(const std::vector<SliceVector>& slices, nlohmann::json metadata = {});

}  // namespace tmpfp
