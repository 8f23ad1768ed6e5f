#pragma once

#include "ospinv/superring/division.hpp"
#include "ospinv/superring/polynomial.hpp"
#include "ospinv/superring/substitution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ospinv {

/// Delta = det(x^i_j) for the square even block of S(m), signature N == m.
/// Computed as a signed permutation sum.
inline SuperPolynomial delta_of(const AlgebraSignature& sig) {
    if (sig.N != sig.m) throw std::invalid_argument("Delta needs N == m, got " + sig.to_string());
    std::vector<int> perm(static_cast<size_t>(sig.m));
    std::iota(perm.begin(), perm.end(), 1);
    TermAccumulator acc;
    do {
        int inversions = 0;
        for (int i = 0; i < sig.m; ++i)
            for (int j = i + 1; j < sig.m; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Monomial mono;
        // entry (row i, column j) of the matrix is x^i_j
        for (int i = 0; i < sig.m; ++i) mono.set_exponent(sig.even_slot(i + 1, perm[i]), 1);
        acc.add(mono, Scalar(inversions % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SuperPolynomial::from_accumulator(sig, acc);
}

/// numerator / Delta^exponent in S(m)[Delta^{-1}].
class LocalizedElement {
public:
    LocalizedElement() = default;
    LocalizedElement(SuperPolynomial numerator, int exponent) : num_(std::move(numerator)), exp_(exponent) {
        if (exp_ < 0) throw std::invalid_argument("negative Delta exponent");
        if (num_.signature().N != num_.signature().m) throw std::invalid_argument("localization needs N == m");
    }

    const SuperPolynomial& numerator() const { return num_; }
    int exponent() const { return exp_; }
    const AlgebraSignature& signature() const { return num_.signature(); }
    bool is_polynomial() const { return exp_ == 0; }

    friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
        return LocalizedElement(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
        require_same(a.signature(), b.signature());
        SuperPolynomial delta = delta_of(a.signature());
        int e = std::max(a.exp_, b.exp_);
        return LocalizedElement(a.num_ * delta.pow(e - a.exp_) + b.num_ * delta.pow(e - b.exp_), e);
    }

    friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
        require_same(a.signature(), b.signature());
        SuperPolynomial delta = delta_of(a.signature());
        return a.num_ * delta.pow(b.exp_) == b.num_ * delta.pow(a.exp_);
    }

private:
    SuperPolynomial num_;
    int exp_ = 0;
};

/// Cancels Delta from the numerator while it divides exactly.
inline LocalizedElement loc_normalize(SuperPolynomial numerator, int exponent) {
    SuperPolynomial delta = delta_of(numerator.signature());
    if (numerator.is_zero()) return LocalizedElement(std::move(numerator), 0);
    while (exponent > 0) {
        auto q = exact_div(numerator, delta);
        if (!q) break;
        numerator = std::move(*q);
        --exponent;
    }
    return LocalizedElement(std::move(numerator), exponent);
}

inline LocalizedElement loc_normalize(const LocalizedElement& x) { return loc_normalize(x.numerator(), x.exponent()); }

/// xi: S(m) -> S(W)[t^{-1}] with W = C^{1|2n}. Copies t < m go to the unit
/// vectors e_t, copy m goes to (0, ..., 0, t, theta^1, ..., theta^{2n}).
/// Returns the Laurent coefficients in t, each an element of the Grassmann
/// algebra in signature (0, n, 1), keyed by the power of t.
inline std::map<int, SuperPolynomial> specialize_xi(const LocalizedElement& f) {
    const auto& sig = f.signature();
    if (sig.m < 1) throw std::invalid_argument("xi needs m >= 1");
    AlgebraSignature mid(1, sig.n, 1);
    AlgebraSignature grass(0, sig.n, 1);
    Substitution s(sig, mid);
    for (int t = 1; t <= sig.m; ++t) {
        for (int a = 1; a <= sig.dim(); ++a) {
            if (t < sig.m) {
                if (a == t) s.set(a, t, SuperPolynomial::one(mid));
            } else if (a == sig.m) {
                s.set(a, t, SuperPolynomial::x(mid, 1, 1));
            } else if (a > sig.m) {
                s.set(a, t, SuperPolynomial::theta(mid, a - sig.m, 1));
            }
        }
    }
    SuperPolynomial image = s.apply(f.numerator());
    std::map<int, TermAccumulator> parts;
    for (const auto& term : image.terms()) {
        int power = term.mono.exponent(0) - f.exponent();
        Monomial g = term.mono;
        g.set_exponent(0, 0);
        // odd bits of (1, n, 1) and (0, n, 1) coincide
        parts[power].add(g, term.coeff);
    }
    std::map<int, SuperPolynomial> out;
    for (auto& [power, acc] : parts) {
        SuperPolynomial c = SuperPolynomial::from_accumulator(grass, acc);
        if (!c.is_zero()) out.emplace(power, std::move(c));
    }
    return out;
}

inline std::map<int, SuperPolynomial> specialize_xi(const SuperPolynomial& f) {
    return specialize_xi(LocalizedElement(f, 0));
}

}  // namespace ospinv
