#include "ucn/lattice.hpp"

namespace ucn {

LatticeClass::LatticeClass(Basis basis, IntVector coords)
    : basis_(basis), coords_(std::move(coords)), content_(vector_gcd(coords_)) {
    if (coords_.empty()) throw InvalidRank("lattice class needs at least one coordinate");
}

LatticeClass LatticeClass::primitive() const {
    if (content_ == 0 || content_ == 1) return *this;
    IntVector scaled = coords_;
    for (auto& x : scaled) x /= content_;
    return LatticeClass(basis_, std::move(scaled));
}

BigInt LatticeClass::coordinate_sum() const { return ucn::coordinate_sum(coords_); }

} // namespace ucn
