#include "ucn/rep.hpp"

#include <string>

namespace ucn {

IntegerMatrix generator_matrix(int n, int j, RepSide side) {
    if (n < 1) throw InvalidRank("generator_matrix requires rank >= 1");
    if (j < 1 || j > n)
        throw IndexError("generator index " + std::to_string(j) + " out of range 1.." +
                         std::to_string(n));
    const auto nn = static_cast<std::size_t>(n);
    const auto jj = static_cast<std::size_t>(j - 1);
    IntegerMatrix m(nn, nn);
    for (std::size_t r = 0; r < nn; ++r) {
        for (std::size_t c = 0; c < nn; ++c) {
            if (r == c) m.at(r, c) = (r == jj) ? -1 : 1;
            else if (c == jj) m.at(r, c) = 2;
        }
    }
    return side == RepSide::Dual ? m : m.transposed();
}

IntegerMatrix rep_matrix(const ReducedWord& w, RepSide side) {
    IntegerMatrix acc = IntegerMatrix::identity(static_cast<std::size_t>(w.rank()));
    for (int g : w.letters()) acc = acc * generator_matrix(w.rank(), g, side);
    return acc;
}

} // namespace ucn
