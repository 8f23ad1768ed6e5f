#pragma once

#include "ospinv/decomp/invariants.hpp"
#include "ospinv/superring/metric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace ospinv {

/// Sparse element of V^{(x)N}: word (a_1, ..., a_N) -> coefficient.
struct TensorVector {
    int m = 0;
    int n = 0;
    int N = 0;
    std::map<std::vector<int>, Scalar> coeffs;

    TensorVector() = default;
    TensorVector(int m, int n, int N) : m(m), n(n), N(N) {}

    void add(const std::vector<int>& word, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs.try_emplace(word, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }
    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const TensorVector& a, const TensorVector& b) {
        return a.m == b.m && a.n == b.n && a.N == b.N && a.coeffs == b.coeffs;
    }
};

/// iota(e_{a_1} (x) ... (x) e_{a_N}) = X^{a_1}_1 ... X^{a_N}_N.
inline SuperPolynomial iota(const TensorVector& v) {
    AlgebraSignature sig(v.m, v.n, v.N);
    SuperPolynomial out(sig);
    for (const auto& [word, c] : v.coeffs) {
        auto term = SuperPolynomial::constant(sig, c);
        for (int t = 1; t <= v.N; ++t) term = term * SuperPolynomial::generator(sig, word[t - 1], t);
        out += term;
    }
    return out;
}

/// Inverse of iota on the multidegree (1, ..., 1) component. In the canonical
/// odd order copies appear in increasing t, so the monomial coefficient is the
/// word coefficient without a sign.
inline TensorVector iota_inverse(const SuperPolynomial& f) {
    const auto& sig = f.signature();
    TensorVector v(sig.m, sig.n, sig.N);
    for (const auto& term : f.terms()) {
        std::vector<int> word(size_t(sig.N), 0);
        if (term.mono.degree() != sig.N) throw std::invalid_argument("not in the multidegree (1,...,1) component");
        for (int t = 1; t <= sig.N; ++t) {
            int found = 0;
            for (int a = 1; a <= sig.dim(); ++a) {
                int e = a <= sig.m ? term.mono.exponent(sig.even_slot(a, t))
                                   : int(term.mono.has_odd(sig.odd_bit(a, t)));
                if (e == 0) continue;
                found += e;
                word[t - 1] = a;
            }
            if (found != 1) throw std::invalid_argument("not in the multidegree (1,...,1) component");
        }
        v.add(word, term.coeff);
    }
    return v;
}

inline TensorVector tensor_product(const TensorVector& a, const TensorVector& b) {
    if (a.m != b.m || a.n != b.n) throw std::invalid_argument("tensor factors over different V");
    TensorVector out(a.m, a.n, a.N + b.N);
    for (const auto& [wa, ca] : a.coeffs) {
        for (const auto& [wb, cb] : b.coeffs) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    }
    return out;
}

/// Signed action of the copy permutation t -> perm[t-1], realized through the
/// substitution homomorphism.
inline TensorVector permute(const TensorVector& v, const std::vector<int>& perm) {
    AlgebraSignature sig(v.m, v.n, v.N);
    return iota_inverse(copy_permutation(sig, perm).apply(iota(v)));
}

/// C = sum_{a,b} e_a (x) (kappa^{-1})_{ab} e_b.
inline TensorVector coevaluation(int m, int n) {
    auto md = MetricData::standard(m, n);
    TensorVector c(m, n, 2);
    for (int a = 1; a <= md.dim(); ++a)
        for (int b = 1; b <= md.dim(); ++b) c.add({a, b}, md.form_inv(a, b));
    return c;
}

/// Contraction of copies i < j: move them to the front with the signed
/// permutation, then pair the first two factors with kappa.
inline TensorVector contraction(int i, int j, const TensorVector& v) {
    if (i < 1 || j <= i || j > v.N) throw std::out_of_range("contraction needs 1 <= i < j <= r");
    std::vector<int> perm(static_cast<size_t>(v.N));
    int next = 3;
    for (int t = 1; t <= v.N; ++t) perm[t - 1] = t == i ? 1 : t == j ? 2 : next++;
    TensorVector moved = (i == 1 && j == 2) ? v : permute(v, perm);
    auto md = MetricData::standard(v.m, v.n);
    TensorVector out(v.m, v.n, v.N - 2);
    for (const auto& [w, c] : moved.coeffs) {
        const Scalar& k = md.form(w[0], w[1]);
        if (k.is_zero()) continue;
        out.add(std::vector<int>(w.begin() + 2, w.end()), k * c);
    }
    return out;
}

struct TensorInvariants {
    int dim_inv = 0;
    int dim_pseudo = 0;
    std::vector<TensorVector> inv_basis;
    std::vector<TensorVector> pseudo_basis;
};

inline constexpr long long kTensorCap = 100000;

inline void check_tensor_cap(int m, int n, int N) {
    long long size = 1;
    for (int t = 0; t < N; ++t) {
        size *= (m + 2 * n);
        if (size > kTensorCap) throw std::length_error("tensor space exceeds the cap of 100000");
    }
}

inline TensorInvariants tensor_invariants(int m, int n, int N, int threads = 1) {
    check_tensor_cap(m, n, N);
    AlgebraSignature sig(m, n, N);
    auto g = brute_graded_invariants(sig, std::vector<int>(size_t(N), 1), threads);
    TensorInvariants r;
    r.dim_inv = g.dim_inv;
    r.dim_pseudo = g.dim_pseudo;
    for (const auto& f : g.inv_basis) r.inv_basis.push_back(iota_inverse(f));
    for (const auto& f : g.pseudo_basis) r.pseudo_basis.push_back(iota_inverse(f));
    return r;
}

/// Span of sigma . C^{(x)N/2} over all sigma in Sym_N, as polynomials via iota.
inline std::vector<SuperPolynomial> brauer_span(int m, int n, int N) {
    if (N % 2 != 0) throw std::invalid_argument("brauer_span needs even N");
    check_tensor_cap(m, n, N);
    AlgebraSignature sig(m, n, N);
    TensorVector power(m, n, 0);
    power.add({}, Scalar(1));
    for (int k = 0; k < N / 2; ++k) power = tensor_product(power, coevaluation(m, n));
    auto base = iota(power);
    std::vector<int> perm(static_cast<size_t>(N));
    std::iota(perm.begin(), perm.end(), 1);
    MonomialIndex idx;
    RowSpace rs;
    std::vector<SuperPolynomial> out;
    do {
        auto f = copy_permutation(sig, perm).apply(base);
        if (rs.add(idx.vectorize(f))) out.push_back(std::move(f));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace ospinv
