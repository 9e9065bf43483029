#include "ucn/tits_cone.hpp"

#include "ucn/rep.hpp"

#include <algorithm>
#include <string>

namespace ucn {

LatticeClass vertex(int n, int j) {
    if (n < 3) throw InvalidRank("chamber vertices need rank >= 3");
    if (j < 1 || j > n)
        throw IndexError("vertex index " + std::to_string(j) + " out of range 1.." +
                         std::to_string(n));
    IntVector c(static_cast<std::size_t>(n), 1);
    c[static_cast<std::size_t>(j - 1)] = -(n - 3);
    return LatticeClass(Basis::Alpha, std::move(c));
}

LatticeClass interior_point(int n) {
    if (n < 1) throw InvalidRank("interior_point requires rank >= 1");
    return LatticeClass(Basis::Alpha, IntVector(static_cast<std::size_t>(n), 1));
}

IntVector pairing_profile(const LatticeClass& v) {
    if (v.basis() != Basis::Alpha)
        throw InvalidInput("pairing_profile is defined on alpha-basis classes");
    const BigInt sigma = v.coordinate_sum();
    IntVector out(v.coords().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sigma - 2 * v.coords()[i];
    return out;
}

FundamentalFace face_of(const LatticeClass& v) {
    FundamentalFace face;
    const IntVector profile = pairing_profile(v);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] < 0) throw InvalidInput("face_of needs a point of the closed chamber");
        if (profile[i] == 0) face.indices.push_back(static_cast<int>(i) + 1);
    }
    return face;
}

SphereSide sphere_membership(const LatticeClass& v) {
    if (v.basis() != Basis::Alpha)
        throw InvalidInput("sphere_membership is defined on alpha-basis classes");
    // b(v,v) = sigma^2 - 2 sum v_i^2, the expanded isotropic-cone equation.
    const BigInt sigma = v.coordinate_sum();
    BigInt sq = 0;
    for (const auto& x : v.coords()) sq += x * x;
    const BigInt val = sigma * sigma - 2 * sq;
    if (val > 0) return SphereSide::Inside;
    if (val == 0) return SphereSide::OnSphere;
    return SphereSide::Outside;
}

LineSphereType line_sphere_type(int n) {
    if (n < 3) throw InvalidRank("line_sphere_type requires rank >= 3");
    // (N-3)(s^2+t^2) = 2st has discriminant 4 - 4(N-3)^2 in s/t.
    if (n == 3) return LineSphereType::Transversal;
    if (n == 4) return LineSphereType::Tangent;
    return LineSphereType::Empty;
}

BoundaryReduction reduce_boundary_point(const LatticeClass& v, std::optional<long> max_steps) {
    if (v.basis() != Basis::Alpha)
        throw InvalidInput("reduce_boundary_point is defined on alpha-basis classes");
    if (v.is_zero()) throw InvalidInput("cannot reduce the zero vector");

    IntVector a = v.coords();
    const std::size_t n = a.size();
    BigInt sigma = coordinate_sum(a);

    long budget;
    if (max_steps) budget = *max_steps;
    else {
        BigInt b = 10 * (1 + abs(sigma));
        budget = b > 1000000000 ? 1000000000 : static_cast<long>(b);
    }

    std::vector<int> word;
    std::vector<LedgerEntry> ledger;
    long steps = 0;
    for (;;) {
        // pairing b(v, alpha_i) = sigma - 2 a_i; pick the most negative.
        std::size_t worst = n;
        BigInt worst_val = 0;
        for (std::size_t i = 0; i < n; ++i) {
            BigInt p = sigma - 2 * a[i];
            if (p < worst_val) {
                worst_val = p;
                worst = i;
            }
        }
        if (worst == n) { // all pairings >= 0: inside the closed chamber
            ReductionCertificate cert{ReducedWord(static_cast<int>(n), word),
                                      LatticeClass(Basis::Alpha, a), std::move(ledger)};
            return BoundaryReduction{BoundaryReduction::Status::Reduced, std::move(cert)};
        }
        if (sigma <= 0 || steps >= budget)
            return BoundaryReduction{BoundaryReduction::Status::NotInCone, std::nullopt};

        ledger.push_back(LedgerEntry{static_cast<int>(steps), static_cast<int>(worst) + 1, sigma});
        // Reflection at worst changes only that coordinate: a_i' = a_i + 2 b(v, alpha_i),
        // so sigma drops by 2 |b(v, alpha_i)| >= 2.
        a[worst] += 2 * worst_val;
        sigma += 2 * worst_val;
        word.push_back(static_cast<int>(worst) + 1);
        ++steps;
    }
}

FlatReduction reduce_flat(std::span<const LatticeClass> points) {
    if (points.empty()) throw InvalidInput("reduce_flat needs at least one point");
    const int n = points.front().rank();
    for (const auto& p : points) {
        if (p.rank() != n) throw RankError("reduce_flat points must share one rank");
        if (p.basis() != Basis::Alpha)
            throw InvalidInput("reduce_flat is defined on alpha-basis classes");
    }

    // Generic point of the flat: the coordinate-wise sum.
    IntVector sum(static_cast<std::size_t>(n), 0);
    for (const auto& p : points)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += p.coords()[i];

    FlatReduction out{FlatReduction::Status::GenericPointNotInCone, ReducedWord(n),
                      FundamentalFace{}, -1};

    auto reduced = reduce_boundary_point(LatticeClass(Basis::Alpha, std::move(sum)));
    if (reduced.status != BoundaryReduction::Status::Reduced) return out;
    const ReducedWord& word = reduced.certificate->word;

    // rep(word) maps the terminal back to the input, so the inverse moves the
    // flat into the chamber.
    const IntegerMatrix back = rep_matrix(word.inverse(), RepSide::Primal);
    std::vector<int> common;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const LatticeClass image(Basis::Alpha, back.apply(points[k].coords()));
        const IntVector profile = pairing_profile(image);
        std::vector<int> zeros;
        for (std::size_t i = 0; i < profile.size(); ++i) {
            if (profile[i] < 0) {
                out.status = FlatReduction::Status::PointEscaped;
                out.escaped_index = static_cast<int>(k);
                return out;
            }
            if (profile[i] == 0) zeros.push_back(static_cast<int>(i) + 1);
        }
        if (k == 0) common = std::move(zeros);
        else {
            std::vector<int> merged;
            std::set_intersection(common.begin(), common.end(), zeros.begin(), zeros.end(),
                                  std::back_inserter(merged));
            common = std::move(merged);
        }
    }
    out.status = FlatReduction::Status::Reduced;
    out.word = word;
    out.face = FundamentalFace{std::move(common)};
    return out;
}

} // namespace ucn
