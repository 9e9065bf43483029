#pragma once

#include "ucn/bigint.hpp"
#include "ucn/errors.hpp"
#include "ucn/word.hpp"

#include <vector>

namespace ucn {

enum class Basis {
    Alpha,  // primal side, coordinates in the simple-root basis
    Chamber // dual side, coordinates in the chamber/h basis
};

// Integer coordinate vector in a chosen basis; the gcd of the coordinates is
// recorded so a primitive representative is always at hand.
class LatticeClass {
  public:
    LatticeClass(Basis basis, IntVector coords);

    int rank() const { return static_cast<int>(coords_.size()); }
    Basis basis() const { return basis_; }
    const IntVector& coords() const { return coords_; }
    const BigInt& content() const { return content_; } // gcd, 0 for the zero vector

    bool is_zero() const { return content_ == 0; }
    LatticeClass primitive() const;
    BigInt coordinate_sum() const;

    bool operator==(const LatticeClass&) const = default;

  private:
    Basis basis_;
    IntVector coords_;
    BigInt content_;
};

// Face D(J) of the fundamental chamber: J is the set of wall indices the
// face lies on. Empty J means the interior of D.
struct FundamentalFace {
    std::vector<int> indices; // sorted, 1-based
    bool operator==(const FundamentalFace&) const = default;
};

struct LedgerEntry {
    int step;        // 0-based step counter
    int generator;   // 1-based letter applied at this step
    BigInt value;    // sigma (or s) before the step; strictly decreasing
    bool operator==(const LedgerEntry&) const = default;
};

// Word certificate for a descent run: applying the representation of `word`
// (primal for Alpha-basis terminals, dual for Chamber-basis ones) to
// `terminal` reproduces the input class exactly.
struct ReductionCertificate {
    ReducedWord word;
    LatticeClass terminal;
    std::vector<LedgerEntry> ledger;
};

} // namespace ucn
