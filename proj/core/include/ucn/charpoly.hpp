#pragma once

#include "ucn/matrix.hpp"

#include <vector>

namespace ucn {

// Monic characteristic polynomial of a square integer matrix, exact.
// Coefficients in ascending order: coeffs[k] multiplies x^k, coeffs.back() = 1.
// Faddeev-LeVerrier over the integers; the division by k at each step is exact.
std::vector<BigInt> char_poly(const IntegerMatrix& m);

// Largest modulus among the real roots of char_poly(m), located by exact
// sign-change bracketing on [1, root_bound] (after stripping factors of x,
// x-1 and x+1) and rational bisection to within tol.
//
// For products of isometries of a nondegenerate form -- every call site in
// this library -- any eigenvalue of modulus > 1 is real, so this is the true
// spectral radius: >= 1 whenever the matrix has infinite order, exactly 1 for
// finite-order matrices, and 0 for nilpotent ones.
double spectral_radius(const IntegerMatrix& m, double tol = 1e-12);

} // namespace ucn
