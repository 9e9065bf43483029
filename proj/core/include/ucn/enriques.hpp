#pragma once

#include "ucn/matrix.hpp"

#include <array>
#include <span>

namespace ucn {

// Rank-10 even unimodular lattice U + E8(-1) of signature (1,9), the free
// Neron-Severi lattice of an Enriques surface. Basis: e1, e2 spanning U,
// then the eight simple roots of E8(-1) (chain 1-2-3-4-5-6-7 with node 8
// attached to node 5, diagonal -2, adjacent pairs +1).
class HyperbolicLattice {
  public:
    HyperbolicLattice();

    static constexpr int rank = 10;
    const IntegerMatrix& gram() const { return gram_; }
    BigInt inner(std::span<const BigInt> x, std::span<const BigInt> y) const;

  private:
    IntegerMatrix gram_;
};

HyperbolicLattice build_lattice();

// e1, e2: standard U basis. v: a norm -2 vector in the E8(-1) part.
// e3 = e1 + e2 + v is isotropic with e3.e1 = e3.e2 = 1, so the pairs
// (e1,e2), (e1,e3), (e2,e3) span three copies of U.
struct IsotropicTriple {
    IntVector e1, e2, e3, v;
};

// Default v = first simple root of E8(-1).
IsotropicTriple build_triple(const HyperbolicLattice& lattice);

// v_e8: coordinates of v in the eight E8(-1) basis vectors; must have
// v.v = -2, else InvalidNormVector.
IsotropicTriple build_triple(const HyperbolicLattice& lattice, std::span<const BigInt> v_e8);

// The involution id on U_j, -id on its orthogonal complement, computed as
// 2P - Id with P the Gram projection onto U_j (integral because U_j is
// unimodular). Lies in O+ and is congruent to the identity mod 2; restricted
// to span(e1,e2,e3) in that basis it is the Coxeter generator matrix M_{3,j}.
IntegerMatrix involution_matrix(const HyperbolicLattice& lattice,
                                const IsotropicTriple& triple, int j);

// log of the spectral radius of the ordered product of involution matrices;
// 0 for the empty word and for single letters, log(9 + 4 sqrt 5) for (1,2,3).
double entropy_of_word(const HyperbolicLattice& lattice, const IsotropicTriple& triple,
                       std::span<const int> word, double tol = 1e-12);

} // namespace ucn
