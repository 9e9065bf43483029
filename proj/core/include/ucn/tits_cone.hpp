#pragma once

#include "ucn/gram.hpp"
#include "ucn/lattice.hpp"

#include <optional>
#include <span>

namespace ucn {

// Extremal ray generator c_j of the fundamental chamber D_N: the permutation
// of (1, ..., 1, -(N-3)) with the exceptional entry in slot j. Requires N >= 3.
LatticeClass vertex(int n, int j);

// The vector u_N = (1, ..., 1), an interior point of D_N for N >= 3.
LatticeClass interior_point(int n);

// i-th entry is b_N(v, alpha_i) = sigma(v) - 2 v_i. All entries >= 0 exactly
// when v lies in the closed chamber; the zero set names the face.
IntVector pairing_profile(const LatticeClass& v); // Alpha basis only

FundamentalFace face_of(const LatticeClass& v); // requires v in the closed chamber

enum class SphereSide { Inside, OnSphere, Outside };

// Sign of b_N(v, v): positive cone / isotropic cone / outside.
SphereSide sphere_membership(const LatticeClass& v);

enum class LineSphereType { Transversal, Tangent, Empty };

// How the projective line through two chamber vertices [c_i], [c_j] meets the
// isotropic sphere: governed by the quadratic (N-3)(s^2 + t^2) = 2 s t.
LineSphereType line_sphere_type(int n);

struct BoundaryReduction {
    enum class Status { Reduced, NotInCone };
    Status status;
    std::optional<ReductionCertificate> certificate; // set iff Reduced
};

// Greedy sigma-descent. While some pairing b(v, alpha_i) is negative, apply
// the primal reflection at the most negative index (ties: smallest index);
// each step changes only coordinate i and drops sigma by 2|b(v, alpha_i)|.
// Terminates with a certificate whose word, applied on the primal side to the
// terminal, reproduces v. Returns NotInCone if sigma reaches <= 0 or the step
// budget (default 10 * (1 + |sigma|)) runs out.
BoundaryReduction reduce_boundary_point(const LatticeClass& v,
                                        std::optional<long> max_steps = std::nullopt);

struct FlatReduction {
    enum class Status { Reduced, GenericPointNotInCone, PointEscaped };
    Status status;
    ReducedWord word;     // valid iff Reduced; maps the common face back onto the input flat
    FundamentalFace face; // valid iff Reduced; common zero set of all reduced points
    int escaped_index;    // valid iff PointEscaped (0-based)
};

// Reduces the coordinate-wise sum of the points as a generic point of the
// flat, applies the inverse of the found word to every point and verifies
// they all land in the closed chamber. The returned face is the intersection
// of the per-point zero sets.
FlatReduction reduce_flat(std::span<const LatticeClass> points);

} // namespace ucn
