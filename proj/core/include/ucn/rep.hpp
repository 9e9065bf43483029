#pragma once

#include "ucn/matrix.hpp"
#include "ucn/word.hpp"

namespace ucn {

// Generator matrix of the rank-N geometric representation. Dual gives
// M_{N,j}: ones on the diagonal except -1 at (j,j), twos elsewhere in
// column j. Primal gives its transpose.
IntegerMatrix generator_matrix(int n, int j, RepSide side);

// Ordered product of generator matrices; a group homomorphism on words.
IntegerMatrix rep_matrix(const ReducedWord& w, RepSide side);

} // namespace ucn
