#include "lsfann/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lsfann {

Dataset::Dataset(std::vector<float> data, std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("dataset: dim must be >= 1");
    if (data.empty()) throw std::invalid_argument("dataset: need at least one point");
    if (data.size() % dim != 0)
        throw std::invalid_argument("dataset: data size " + std::to_string(data.size()) +
                                    " is not a multiple of dim " + std::to_string(dim));
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!std::isfinite(data[i]))
            throw std::invalid_argument("dataset: non-finite coordinate in row " +
                                        std::to_string(i / dim));
    }
    data_ = std::move(data);
    dim_ = dim;
}

Dataset normalize(const Dataset& ds) {
    Dataset out = ds;
    const std::size_t n = ds.size(), d = ds.dim();
    for (std::size_t i = 0; i < n; ++i) {
        double sq = 0.0;
        const float* row = out.data_.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) sq += double(row[j]) * double(row[j]);
        if (sq == 0.0)
            throw std::invalid_argument("normalize: zero-norm row " + std::to_string(i));
        const float inv = float(1.0 / std::sqrt(sq));
        float* w = out.data_.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) w[j] *= inv;
    }
    return out;
}

Dataset center(const Dataset& ds) {
    if (ds.is_centered()) throw std::invalid_argument("center: dataset already centered");
    const std::size_t n = ds.size(), d = ds.dim();
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float* row = ds.data_.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
    }
    Dataset out = ds;
    out.center_.resize(d);
    for (std::size_t j = 0; j < d; ++j) out.center_[j] = float(mean[j] / double(n));
    // Subtraction happens in float32 so a reload from (raw rows, stored
    // center) reproduces these coordinates bit for bit.
    for (std::size_t i = 0; i < n; ++i) {
        float* row = out.data_.data() + i * d;
        for (std::size_t j = 0; j < d; ++j) row[j] -= out.center_[j];
    }
    out.centered_ = true;
    return out;
}

double inner_product(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("inner_product: dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += double(a[i]) * double(b[i]);
    return acc;
}

}  // namespace lsfann
