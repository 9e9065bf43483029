#include "ucn/gram.hpp"

#include <vector>

namespace ucn {

GramForm::GramForm(std::size_t rank, IntegerMatrix m) : n(rank), matrix(std::move(m)) {
    if (matrix.rows() != n || matrix.cols() != n)
        throw ShapeError("Gram matrix dimensions do not match the rank");
    if (!matrix.is_symmetric()) throw ShapeError("Gram matrix must be symmetric");
}

GramForm gram_form_ucn(std::size_t n) {
    if (n == 0) throw InvalidRank("gram_form_ucn requires rank >= 1");
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = (i == j) ? -1 : 1;
    return GramForm(n, std::move(m));
}

BigInt eval_form(const GramForm& form, std::span<const BigInt> x, std::span<const BigInt> y) {
    if (x.size() != form.n || y.size() != form.n)
        throw ShapeError("eval_form vector length does not match the rank");
    BigInt acc = 0;
    for (std::size_t i = 0; i < form.n; ++i) {
        if (x[i] == 0) continue;
        BigInt row = 0;
        for (std::size_t j = 0; j < form.n; ++j) row += form.matrix.at(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Signature signature(const GramForm& form) {
    const std::size_t n = form.n;
    std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = BigRational(form.matrix.at(i, j));

    // Symmetric congruence diagonalization over the rationals.
    Signature sig;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            std::size_t swap_j = n;
            for (std::size_t j = i + 1; j < n; ++j)
                if (a[j][j] != 0) { swap_j = j; break; }
            if (swap_j < n) {
                a[i].swap(a[swap_j]);
                for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][swap_j]);
            } else {
                std::size_t off_j = n;
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) { off_j = j; break; }
                if (off_j == n) { // row i is zero on the trailing block
                    ++sig.zero;
                    continue;
                }
                // All trailing diagonal entries vanish, so adding row/column
                // off_j puts the nonzero value 2 a[i][off_j] on the diagonal.
                for (std::size_t c = 0; c < n; ++c) a[i][c] += a[off_j][c];
                for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][off_j];
            }
        }
        const BigRational pivot = a[i][i];
        if (pivot > 0) ++sig.positive;
        else ++sig.negative;
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a[r][i] == 0) continue;
            const BigRational f = a[r][i] / pivot;
            for (std::size_t c = 0; c < n; ++c) a[r][c] -= f * a[i][c];
            for (std::size_t c = 0; c < n; ++c) a[c][r] -= f * a[c][i];
        }
    }
    return sig;
}

} // namespace ucn
