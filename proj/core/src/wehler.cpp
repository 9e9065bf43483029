#include "ucn/wehler.hpp"

#include "ucn/gram.hpp"

#include <string>

namespace ucn {

WehlerContext::WehlerContext(int dimension) : n(dimension) {
    if (n < 2) throw InvalidRank("Wehler context needs dimension >= 2");
}

NSClass::NSClass(const WehlerContext& ctx, IntVector coeffs)
    : coeffs_(std::move(coeffs)), s_(coordinate_sum(coeffs_)) {
    if (static_cast<int>(coeffs_.size()) != ctx.rank())
        throw RankError("class has " + std::to_string(coeffs_.size()) + " coefficients, expected " +
                        std::to_string(ctx.rank()));
}

NSClass involution_action(const WehlerContext& ctx, int j, const NSClass& d) {
    if (j < 1 || j > ctx.rank())
        throw IndexError("involution index " + std::to_string(j) + " out of range 1.." +
                         std::to_string(ctx.rank()));
    IntVector out = d.coeffs();
    const BigInt aj = out[static_cast<std::size_t>(j - 1)];
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += 2 * aj;
    out[static_cast<std::size_t>(j - 1)] = -aj;
    return NSClass(ctx, std::move(out));
}

bool is_nef(const WehlerContext&, const NSClass& d) {
    for (const auto& a : d.coeffs())
        if (a < 0) return false;
    return true;
}

std::optional<PairwiseViolation> effective_pairwise_check(const WehlerContext&, const NSClass& d) {
    const auto& a = d.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] + a[j] < 0)
                return PairwiseViolation{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    return std::nullopt;
}

NefReduction make_nef(const WehlerContext& ctx, const NSClass& d, std::optional<long> max_steps) {
    if (auto bad = effective_pairwise_check(ctx, d))
        throw NotEffectiveLike("pairwise condition fails: a_" + std::to_string(bad->i) + " + a_" +
                               std::to_string(bad->j) + " < 0");

    IntVector a = d.coeffs();
    BigInt s = d.s();

    long budget;
    if (max_steps) budget = *max_steps;
    else {
        BigInt b = 10 * (1 + abs(s));
        budget = b > 1000000000 ? 1000000000 : static_cast<long>(b);
    }

    std::vector<int> word;
    std::vector<LedgerEntry> ledger;
    long steps = 0;
    for (;;) {
        std::size_t neg = a.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 0) {
                neg = i;
                break; // the pairwise condition admits at most one
            }
        }
        if (neg == a.size()) {
            ReductionCertificate cert{ReducedWord(ctx.rank(), word),
                                      LatticeClass(Basis::Chamber, a), std::move(ledger)};
            return NefReduction{NefReduction::Status::Reduced, std::move(cert)};
        }
        if (steps >= budget) return NefReduction{NefReduction::Status::StepLimit, std::nullopt};

        ledger.push_back(LedgerEntry{static_cast<int>(steps), static_cast<int>(neg) + 1, s});
        const BigInt ai = a[neg];
        for (std::size_t k = 0; k < a.size(); ++k) a[k] += 2 * ai;
        a[neg] = -ai;
        s += 2 * (ctx.n - 1) * ai; // exact decrement, a_i < 0
        word.push_back(static_cast<int>(neg) + 1);
        ++steps;

        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j)
                if (a[i] + a[j] < 0)
                    return NefReduction{NefReduction::Status::PairwiseBrokeMidRun, std::nullopt};
    }
}

MovableVerdict movable_effective_member(const WehlerContext& ctx, const NSClass& d) {
    if (auto bad = effective_pairwise_check(ctx, d)) {
        return MovableVerdict{false, std::nullopt,
                              "pairwise violation: a_" + std::to_string(bad->i) + " + a_" +
                                  std::to_string(bad->j) + " < 0"};
    }
    NefReduction red = make_nef(ctx, d);
    if (red.status == NefReduction::Status::Reduced)
        return MovableVerdict{true, std::move(red.certificate), ""};
    return MovableVerdict{false, std::nullopt,
                          red.status == NefReduction::Status::StepLimit
                              ? "descent step budget exhausted"
                              : "pairwise condition broke during descent"};
}

IntegerMatrix surface_gram() {
    IntegerMatrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) g.at(i, j) = (i == j) ? 0 : 2;
    return g;
}

bool surface_positive_cone_contains(std::span<const BigInt> u) {
    if (u.size() != 3) throw ShapeError("surface classes have three coordinates");
    const IntegerMatrix g = surface_gram();
    const GramForm form(3, g);
    const BigInt uu = eval_form(form, u, u);
    IntVector h1{1, 0, 0};
    const BigInt uh = eval_form(form, u, h1);
    return uu > 0 && uh > 0;
}

} // namespace ucn
