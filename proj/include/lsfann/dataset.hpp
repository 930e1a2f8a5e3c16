#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lsfann/common.hpp"

namespace lsfann {

/**
 * An immutable set of n d-dimensional float vectors with dense ids 0..n-1.
 *
 * Rows are either unit-norm (the usual case for angular search) or centered
 * (mean subtracted, rows no longer unit). A centered dataset remembers the
 * subtracted mean so indexes can persist it. Coordinates are float32;
 * inner products accumulate in float64.
 */
class Dataset {
public:
    Dataset() = default;

    // Takes ownership of row-major data (n inferred from data.size() / dim).
    // Throws std::invalid_argument on empty input, ragged size, or
    // non-finite coordinates.
    Dataset(std::vector<float> data, std::size_t dim);

    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
    std::size_t dim() const noexcept { return dim_; }

    std::span<const float> point(std::size_t i) const {
        return {data_.data() + i * dim_, dim_};
    }
    std::span<const float> raw() const noexcept { return data_; }

    bool is_centered() const noexcept { return centered_; }
    // Pre-centering mean; empty span when not centered.
    std::span<const float> center() const noexcept { return center_; }

    friend Dataset normalize(const Dataset& ds);
    friend Dataset center(const Dataset& ds);

private:
    std::vector<float> data_;
    std::vector<float> center_;
    std::size_t dim_ = 0;
    bool centered_ = false;
};

// Scales every row to unit Euclidean norm. Idempotent (already-unit rows are
// rescaled by exactly 1.0f). Throws std::invalid_argument naming the row
// index if a row has zero norm.
Dataset normalize(const Dataset& ds);

// Subtracts the mean m = sum(x_i)/n from every row and records m. Rows are
// not renormalized. Throws std::invalid_argument if already centered.
Dataset center(const Dataset& ds);

// Exact dot product, float inputs, double accumulation.
// Throws std::invalid_argument on dimension mismatch.
double inner_product(std::span<const float> a, std::span<const float> b);

}  // namespace lsfann
