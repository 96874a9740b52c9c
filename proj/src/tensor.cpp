#include "tmpfp/tensor.hpp"

#include "tmpfp/error.hpp"

#include <cmath>
#include <functional>
#include <numeric>

namespace tmpfp {

TmpTensor::TmpTensor(std::vector<std::uint32_t> shape, std::vector<double> data, nlohmann::json metadata)
    : shape_(std::move(shape)), data_(std::move(data)), metadata_(std::move(metadata)) {
    std::size_t expected = std::accumulate(shape_.begin(), shape_.end(), std::size_t{1}, std::multiplies<>());
    if (shape_.empty() || expected != data_.size()) throw ContractViolation("tensor shape does not match its data");
}

std::size_t TmpTensor::slice_size() const {
    return std::accumulate(shape_.begin() + 1, shape_.end(), std::size_t{1}, std::multiplies<>());
}

std::span<const double> TmpTensor::slice(std::size_t j) const {
    if (j >= shape_.at(0)) throw ContractViolation("tensor slice out of range");
    const std::size_t n = slice_size();
    return std::span<const double>(data_).subspan(j * n, n);
}

TmpTensor assemble_tmp(const std::vector<SliceVector>& slices, nlohmann::json metadata) {
    if (slices.empty()) throw ComputationError("no slices to assemble");
    const auto& shape = slices.front().shape;
    std::vector<std::uint32_t> full{static_cast<std::uint32_t>(slices.size())};
    full.insert(full.end(), shape.begin(), shape.end());
    std::vector<double> data;
    for (const auto& s : slices) {
        if (s.shape != shape) throw ComputationError("slice shapes differ");
        std::size_t n = std::accumulate(s.shape.begin(), s.shape.end(), std::size_t{1}, std::multiplies<>());
        if (n != s.values.size()) throw ComputationError("slice values do not match the slice shape");
        for (double v : s.values)
            if (!std::isfinite(v)) throw ComputationError("non-finite tensor entry");
        data.insert(data.end(), s.values.begin(), s.values.end());
    }
    return TmpTensor(std::move(full), std::move(data), std::move(metadata));
}

}  // namespace tmpfp
