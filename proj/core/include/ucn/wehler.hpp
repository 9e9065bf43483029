#pragma once

#include "ucn/lattice.hpp"
#include "ucn/matrix.hpp"

#include <optional>
#include <span>
#include <string>

namespace ucn {

// Neron-Severi model of a Wehler variety of dimension n: rank n+1 lattice
// with basis h_1..h_{n+1}, nef cone = nonnegative orthant, and n+1 birational
// involutions acting by the matrices M_{n+1,j}.
struct WehlerContext {
    int n;
    explicit WehlerContext(int dimension); // requires n >= 2
    int rank() const { return n + 1; }
};

// Divisor class sum(a_j h_j) with the coordinate sum cached.
class NSClass {
  public:
    NSClass(const WehlerContext& ctx, IntVector coeffs);

    int rank() const { return static_cast<int>(coeffs_.size()); }
    const IntVector& coeffs() const { return coeffs_; }
    const BigInt& s() const { return s_; }

    bool operator==(const NSClass&) const = default;

  private:
    IntVector coeffs_;
    BigInt s_;
};

// Pullback by the j-th involution: a_j -> -a_j, a_k -> a_k + 2 a_j. Equals
// multiplication by M_{n+1,j} in the h basis; involutive.
NSClass involution_action(const WehlerContext& ctx, int j, const NSClass& d);

// Closed ample cone test: all coefficients >= 0.
bool is_nef(const WehlerContext& ctx, const NSClass& d);

struct PairwiseViolation {
    int i, j; // 1-based pair with a_i + a_j < 0
};

// Necessary condition for effectivity: a_i + a_j >= 0 for every pair, hence
// at most one negative coefficient. nullopt means the check passes.
std::optional<PairwiseViolation> effective_pairwise_check(const WehlerContext& ctx,
                                                          const NSClass& d);

struct NefReduction {
    enum class Status { Reduced, PairwiseBrokeMidRun, StepLimit };
    Status status;
    std::optional<ReductionCertificate> certificate; // set iff Reduced
};

// Descent into the nef cone. While exactly one coefficient a_i is negative,
// apply the i-th involution; each step drops the coordinate sum by exactly
// 2(n-1)|a_i|. The certificate word, applied on the dual side to the nef
// terminal, reproduces d. Throws NotEffectiveLike if the initial pairwise
// check fails.
NefReduction make_nef(const WehlerContext& ctx, const NSClass& d,
                      std::optional<long> max_steps = std::nullopt);

struct MovableVerdict {
    bool member;
    std::optional<ReductionCertificate> certificate; // set iff member
    std::string reason;                              // set iff !member
};

// Membership of an integer class in the movable effective cone, decided by
// the pairwise condition plus nef descent.
MovableVerdict movable_effective_member(const WehlerContext& ctx, const NSClass& d);

// Intersection form of the n = 2 Wehler surface in the basis (h_1, h_2, h_3).
IntegerMatrix surface_gram();

// Ample cone of a generic Wehler surface: u.u > 0 and u.h_1 > 0.
bool surface_positive_cone_contains(std::span<const BigInt> u);

} // namespace ucn
