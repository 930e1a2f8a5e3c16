#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsfann/common.hpp"

namespace lsfann {

// In-place unnormalized Walsh-Hadamard transform, O(n log n).
// Applying it twice yields n * v. Throws std::invalid_argument unless
// v.size() is a power of two >= 1.
void fht(std::span<float> v);

/**
 * Structured Spinner stack: simulates the projection of a d-vector onto D
 * Gaussian random vectors in O(D log d_pad) time.
 *
 * The input is zero-padded to d_pad = 2^ceil(log2 d). Each block applies
 * three sign-diagonal + FHT stages; D/d_pad independent blocks are
 * concatenated when D > d_pad, and a single block is truncated to its first
 * D coordinates when D < d_pad. Outputs are scaled so that for unit input
 * each coordinate has an approximately N(0, 1) marginal, i.e. it behaves
 * like x^T r_i with r_i drawn from N(0, I_d).
 *
 * Immutable after construction; project() is pure and reentrant.
 */
class SpinnerStack {
public:
    // D must be a power of two; when D > d_pad it must be a multiple of
    // d_pad. Identical seeds give identical sign diagonals and outputs.
    SpinnerStack(std::size_t dim, std::size_t num_projections, std::uint64_t seed);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t padded_dim() const noexcept { return padded_dim_; }
    std::size_t num_projections() const noexcept { return num_projections_; }
    std::uint64_t seed() const noexcept { return seed_; }

    // out.size() must equal num_projections(); scratch.size() >= padded_dim().
    // x.size() may be anything <= padded_dim (zero-padded); larger throws.
    void project(std::span<const float> x, std::span<float> out,
                 std::span<float> scratch) const;

    std::vector<float> project(std::span<const float> x) const;

    static std::size_t pad_dimension(std::size_t d);

private:
    std::size_t dim_ = 0;
    std::size_t padded_dim_ = 0;
    std::size_t num_projections_ = 0;
    std::size_t blocks_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<float> signs_;  // blocks x 3 stages x padded_dim, values +/-1
};

}  // namespace lsfann
