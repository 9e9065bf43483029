#include "ucn/matrix.hpp"

#include <utility>

namespace ucn {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw ShapeError("entry count does not match matrix dimensions");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& lik = at(i, k);
            if (lik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += lik * rhs.at(k, j);
        }
    }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum shape mismatch");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntVector IntegerMatrix::apply(std::span<const BigInt> v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        out[i] = std::move(s);
    }
    return out;
}

bool IntegerMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntegerMatrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

BigInt IntegerMatrix::determinant() const {
    if (!square()) throw ShapeError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;

    // Bareiss fraction-free elimination: every division below is exact.
    IntegerMatrix m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

BigInt IntegerMatrix::trace() const {
    if (!square()) throw ShapeError("trace of a non-square matrix");
    BigInt t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

BigInt IntegerMatrix::root_bound() const {
    BigInt best = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += abs(at(i, j));
        if (s > best) best = s;
    }
    return best + 1;
}

} // namespace ucn
