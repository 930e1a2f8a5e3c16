#include "lsfann/rotation.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <string>

namespace lsfann {

namespace {

bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

void fht(std::span<float> v) {
    const std::size_t n = v.size();
    if (!is_pow2(n))
        throw std::invalid_argument("fht: length " + std::to_string(n) +
                                    " is not a power of two");
    float* a = v.data();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const float x = a[j];
                const float y = a[j + len];
                a[j] = x + y;
                a[j + len] = x - y;
            }
        }
    }
}

std::size_t SpinnerStack::pad_dimension(std::size_t d) {
    std::size_t p = 1;
    while (p < d) p <<= 1;
    return p;
}

SpinnerStack::SpinnerStack(std::size_t dim, std::size_t num_projections, std::uint64_t seed)
    : dim_(dim), num_projections_(num_projections), seed_(seed) {
    if (dim == 0) throw std::invalid_argument("SpinnerStack: dim must be >= 1");
    if (!is_pow2(num_projections))
        throw std::invalid_argument("SpinnerStack: D must be a power of two, got " +
                                    std::to_string(num_projections));
    padded_dim_ = pad_dimension(dim);
    if (num_projections >= padded_dim_) {
        if (num_projections % padded_dim_ != 0)
            throw std::invalid_argument("SpinnerStack: D must be a multiple of padded dim");
        blocks_ = num_projections / padded_dim_;
    } else {
        blocks_ = 1;  // one block, truncated to the first D coordinates
    }

    signs_.resize(blocks_ * 3 * padded_dim_);
    std::uint64_t state = seed;
    std::uint64_t word = 0;
    int bits_left = 0;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        if (bits_left == 0) {
            word = mix64(state++);
            bits_left = 64;
        }
        signs_[i] = (word & 1u) ? 1.0f : -1.0f;
        word >>= 1;
        --bits_left;
    }
}

void SpinnerStack::project(std::span<const float> x, std::span<float> out,
                           std::span<float> scratch) const {
    if (x.size() > padded_dim_)
        throw std::invalid_argument("SpinnerStack::project: input dim " +
                                    std::to_string(x.size()) + " exceeds padded dim " +
                                    std::to_string(padded_dim_));
    if (out.size() != num_projections_)
        throw std::invalid_argument("SpinnerStack::project: bad output size");
    if (scratch.size() < padded_dim_)
        throw std::invalid_argument("SpinnerStack::project: scratch too small");

    // Unnormalized FHT grows norms by sqrt(d_pad) per stage; dividing the
    // three-stage composite by d_pad leaves an orthonormal rotation scaled
    // by sqrt(d_pad), which is what gives unit-variance Gaussian marginals
    // for unit input.
    const float scale = 1.0f / float(padded_dim_);
    float* buf = scratch.data();
    for (std::size_t b = 0; b < blocks_; ++b) {
        std::memcpy(buf, x.data(), x.size() * sizeof(float));
        std::memset(buf + x.size(), 0, (padded_dim_ - x.size()) * sizeof(float));
        const float* block_signs = signs_.data() + b * 3 * padded_dim_;
        for (int stage = 0; stage < 3; ++stage) {
            const float* s = block_signs + stage * padded_dim_;
            for (std::size_t j = 0; j < padded_dim_; ++j) buf[j] *= s[j];
            fht({buf, padded_dim_});
        }
        const std::size_t take = std::min(padded_dim_, num_projections_);
        float* dst = out.data() + b * padded_dim_;
        for (std::size_t j = 0; j < take; ++j) dst[j] = buf[j] * scale;
    }
}

std::vector<float> SpinnerStack::project(std::span<const float> x) const {
    std::vector<float> out(num_projections_);
    std::vector<float> scratch(padded_dim_);
    project(x, out, scratch);
    return out;
}

}  // namespace lsfann
