#include "ucn/charpoly.hpp"

#include "ucn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ucn {

std::vector<BigInt> char_poly(const IntegerMatrix& m) {
    if (!m.square()) throw ShapeError("char_poly of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = 1;
    if (n == 0) return coeffs;

    // Faddeev-LeVerrier: A_1 = M, c_k = -tr(A_k)/k, A_{k+1} = M (A_k + c_k I).
    // The divisions are exact over the integers.
    IntegerMatrix a = m;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt t = a.trace();
        BigInt ck = -t / BigInt(k);
        if (ck * BigInt(k) != -t) throw ShapeError("Faddeev-LeVerrier division not exact");
        coeffs[n - k] = ck;
        if (k < n) {
            for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, i) += ck;
            a = m * a;
        }
    }
    return coeffs;
}

namespace {

// p(x) for rational x, exact Horner; coefficients ascending.
BigRational eval_poly(const std::vector<BigRational>& p, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int eval_sign(const std::vector<BigRational>& p, const BigRational& x) {
    return eval_poly(p, x).sign();
}

// Exact synthetic division by (x - r) for integer r in {1,-1}; requires p(r) = 0.
std::vector<BigInt> deflate_root(const std::vector<BigInt>& p, int r) {
    std::vector<BigInt> q(p.size() - 1);
    BigInt carry = 0;
    for (std::size_t k = p.size(); k-- > 1;) {
        carry = p[k] + carry * r;
        q[k - 1] = carry;
    }
    return q;
}

BigInt eval_at_unit(const std::vector<BigInt>& p, int r) {
    BigInt acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * r + *it;
    return acc;
}

} // namespace

double spectral_radius(const IntegerMatrix& m, double tol) {
    if (!m.square()) throw ShapeError("spectral_radius of a non-square matrix");
    if (tol <= 0) throw InvalidInput("spectral_radius tolerance must be positive");
    if (m.rows() == 0) return 0.0;

    std::vector<BigInt> p = char_poly(m);

    // Strip roots at the origin.
    std::size_t low = 0;
    while (low < p.size() - 1 && p[low] == 0) ++low;
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
    if (p.size() == 1) return 0.0; // p was a power of x

    // Deflate roots at +-1 exactly; they contribute radius 1.
    bool unit_root = false;
    for (int r : {1, -1}) {
        while (p.size() > 1 && eval_at_unit(p, r) == 0) {
            p = deflate_root(p, r);
            unit_root = true;
        }
    }
    if (p.size() == 1) return unit_root ? 1.0 : 0.0;

    const BigRational bound(m.root_bound());
    double best = 1.0; // |constant term| >= 1 forces a root of modulus >= 1

    // Largest real root of p(sx) in (1, bound), s = +-1. After deflation a
    // sign change at 1 is equivalent to such a root for isometry products
    // (the dominant non-unit eigenvalue is real and simple there).
    for (int s : {1, -1}) {
        std::vector<BigRational> q(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k] = BigRational(p[k]);
            if (s < 0 && (k % 2) == 1) q[k] = -q[k];
        }
        if (q.back() < 0) // normalize so q(bound) > 0
            for (auto& c : q) c = -c;
        if (eval_sign(q, 1) >= 0) continue; // no sign change: no real root beyond 1
        BigRational lo = 1, hi = bound;
        const BigRational width(BigRational(tol) / 2);
        while (hi - lo > width) {
            BigRational mid = (lo + hi) / 2;
            if (eval_sign(q, mid) < 0) lo = mid;
            else hi = mid;
        }
        const double r = static_cast<double>((lo + hi) / 2);
        best = std::max(best, r);
    }
    return best;
}

} // namespace ucn
