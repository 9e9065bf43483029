#pragma once

#include "ucn/bigint.hpp"
#include "ucn/errors.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ucn {

// Dense row-major matrix over arbitrary-precision integers.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<const BigInt> entries() const { return a_; }

    IntegerMatrix operator*(const IntegerMatrix& rhs) const;
    IntegerMatrix operator+(const IntegerMatrix& rhs) const;
    IntegerMatrix transposed() const;
    bool operator==(const IntegerMatrix& rhs) const = default;

    IntVector apply(std::span<const BigInt> v) const; // M * v

    bool is_symmetric() const;
    bool is_identity() const;

    // Exact determinant by fraction-free (Bareiss) elimination.
    BigInt determinant() const;

    BigInt trace() const;

    // 1 + max absolute row sum; every eigenvalue has modulus below this.
    BigInt root_bound() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

} // namespace ucn
