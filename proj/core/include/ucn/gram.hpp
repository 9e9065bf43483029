#pragma once

#include "ucn/matrix.hpp"

#include <cstddef>
#include <span>

namespace ucn {

// Symmetric bilinear form given by an integer Gram matrix.
struct GramForm {
    std::size_t n = 0;
    IntegerMatrix matrix;

    GramForm() = default;
    GramForm(std::size_t rank, IntegerMatrix m);
};

// The form b_N of the rank-N universal Coxeter group: -1 on the diagonal,
// +1 everywhere else. Signature (1, N-1) for N >= 3.
GramForm gram_form_ucn(std::size_t n);

// x^T B y, exact. For b_N this equals sigma(x) sigma(y) - 2 sum x_i y_i.
BigInt eval_form(const GramForm& form, std::span<const BigInt> x, std::span<const BigInt> y);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    bool operator==(const Signature&) const = default;
};

// Inertia of the form, computed by exact symmetric congruence
// diagonalization over the rationals. No floating point anywhere.
Signature signature(const GramForm& form);

} // namespace ucn
