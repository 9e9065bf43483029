#pragma once

#include "ucn/errors.hpp"

#include <functional>
#include <vector>

namespace ucn {

// Element of the rank-N universal Coxeter group as a word in the generators
// t_1..t_N. Stored in free-product normal form (no two adjacent letters
// equal); since the generators are involutions with no other relations,
// word equality is group equality.
class ReducedWord {
  public:
    explicit ReducedWord(int rank);
    ReducedWord(int rank, std::vector<int> letters); // normalizes eagerly

    int rank() const { return rank_; }
    const std::vector<int>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }

    ReducedWord operator*(const ReducedWord& rhs) const; // RankError on mismatch
    ReducedWord inverse() const;                         // letters reversed

    bool operator==(const ReducedWord&) const = default;

  private:
    int rank_;
    std::vector<int> letters_;
};

enum class RepSide {
    Primal, // rho, alpha-basis action, generator matrix M_{N,j}^T
    Dual    // rho*, chamber-basis action, generator matrix M_{N,j}
};

// Visits every reduced word of length <= max_len, ordered by length and then
// lexicographically by letters. Deterministic; the identity comes first.
void for_each_reduced_word(int rank, int max_len,
                           const std::function<void(const std::vector<int>&)>& visit);

} // namespace ucn
