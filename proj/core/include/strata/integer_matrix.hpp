#pragma once

#include <cstddef>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

/// Dense integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> data_;
};

/// Nonzero diagonal of the Smith normal form, positive and in divisibility
/// order (d_1 | d_2 | ...). Its length is the rank.
std::vector<BigInt> smith_diagonal(IntegerMatrix m);

}  // namespace strata
