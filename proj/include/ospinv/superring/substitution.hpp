#pragma once

#include "ospinv/superring/metric.hpp"
#include "ospinv/superring/polynomial.hpp"
#include "ospinv/superring/scalar_matrix.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

/// A superalgebra homomorphism S(source) -> S(target) given by the images of
/// the free generators. Each image must have the parity of its generator.
class Substitution {
public:
    Substitution(AlgebraSignature source, AlgebraSignature target)
        : source_(source), target_(target), images_(size_t(source.num_generators())) {
        for (int t = 1; t <= source.N; ++t)
            for (int a = 1; a <= source.dim(); ++a) images_[index(a, t)] = SuperPolynomial(target);
    }

    /// Identity on a signature.
    static Substitution identity(AlgebraSignature sig) {
        Substitution s(sig, sig);
        for (int t = 1; t <= sig.N; ++t)
            for (int a = 1; a <= sig.dim(); ++a) s.set(a, t, SuperPolynomial::generator(sig, a, t));
        return s;
    }

    void set(int a, int t, SuperPolynomial image) {
        source_.check_generator(a, t);
        require_same(image.signature(), target_);
        int p = image.parity();
        if (p == -1 || (!image.is_zero() && p != source_.parity(a))) {
            throw std::invalid_argument("image of generator (" + std::to_string(a) + "," + std::to_string(t) +
                                        ") has the wrong parity");
        }
        images_[index(a, t)] = std::move(image);
    }

    const SuperPolynomial& image(int a, int t) const { return images_[index(a, t)]; }
    const AlgebraSignature& source() const { return source_; }
    const AlgebraSignature& target() const { return target_; }

    SuperPolynomial apply(const SuperPolynomial& f) const {
        require_same(f.signature(), source_);
        const auto& sig = source_;
        // images indexed by packed slot / odd bit
        std::vector<const SuperPolynomial*> even_img(size_t(sig.num_even()));
        std::vector<const SuperPolynomial*> odd_img(size_t(sig.num_odd()));
        for (int s = 0; s < sig.num_even(); ++s) even_img[s] = &image(sig.even_row(s), sig.even_copy(s));
        for (int b = 0; b < sig.num_odd(); ++b) odd_img[b] = &image(sig.odd_row(b), sig.odd_copy(b));

        std::vector<std::vector<SuperPolynomial>> powers(size_t(sig.num_even()));
        auto power = [&](int slot, int e) -> const SuperPolynomial& {
            auto& cache = powers[slot];
            if (cache.empty()) cache.push_back(SuperPolynomial::one(target_));
            while (int(cache.size()) <= e) cache.push_back(cache.back() * *even_img[slot]);
            return cache[e];
        };

        TermAccumulator acc;
        for (const auto& term : f.terms()) {
            const Monomial& mono = term.mono;
            bool vanishes = false;
            for (int s = 0; s < sig.num_even() && !vanishes; ++s)
                if (mono.exponent(s) > 0 && even_img[s]->is_zero()) vanishes = true;
            for (int b : mono.odd_bits())
                if (odd_img[b]->is_zero()) vanishes = true;
            if (vanishes) continue;

            SuperPolynomial prod = SuperPolynomial::constant(target_, term.coeff);
            for (int s = 0; s < sig.num_even(); ++s) {
                int e = mono.exponent(s);
                if (e > 0) prod = prod * power(s, e);
            }
            for (int b : mono.odd_bits()) prod = prod * *odd_img[b];
            for (const auto& t : prod.terms()) acc.add(t.mono, t.coeff);
        }
        return SuperPolynomial::from_accumulator(target_, acc);
    }

    /// Composition: first *this, then outer.
    Substitution then(const Substitution& outer) const {
        require_same(target_, outer.source_);
        Substitution r(source_, outer.target_);
        for (int t = 1; t <= source_.N; ++t)
            for (int a = 1; a <= source_.dim(); ++a) r.images_[index(a, t)] = outer.apply(image(a, t));
        return r;
    }

private:
    size_t index(int a, int t) const { return size_t(t - 1) * source_.dim() + (a - 1); }

    AlgebraSignature source_;
    AlgebraSignature target_;
    std::vector<SuperPolynomial> images_;
};

inline SuperPolynomial substitute(const SuperPolynomial& f, const Substitution& s) { return s.apply(f); }

/// pi: theta -> 0, x -> x. Drops every term with an odd factor.
inline SuperPolynomial leading_term(const SuperPolynomial& f) {
    std::vector<Term> out;
    for (const auto& t : f.terms())
        if (t.mono.odd_mask() == 0) out.push_back(t);
    return SuperPolynomial(f.signature(), std::move(out));
}

/// Inclusion S(m, n, N) -> S(m, n, N') for N' >= N.
inline SuperPolynomial embed(const SuperPolynomial& f, int new_N) {
    const auto& sig = f.signature();
    if (new_N < sig.N) throw std::invalid_argument("embedding must not shrink N");
    AlgebraSignature target(sig.m, sig.n, new_N);
    Substitution s(sig, target);
    for (int t = 1; t <= sig.N; ++t)
        for (int a = 1; a <= sig.dim(); ++a) s.set(a, t, SuperPolynomial::generator(target, a, t));
    return s.apply(f);
}

/// Copy-index permutation X^a_t -> X^a_{perm[t-1]} (perm is 1-based images).
inline Substitution copy_permutation(const AlgebraSignature& sig, const std::vector<int>& perm) {
    if (int(perm.size()) != sig.N) throw std::invalid_argument("permutation length must equal N");
    Substitution s(sig, sig);
    for (int t = 1; t <= sig.N; ++t)
        for (int a = 1; a <= sig.dim(); ++a) s.set(a, t, SuperPolynomial::generator(sig, a, perm[t - 1]));
    return s;
}

/// R: S(N) -> Lambda_{N-m}. Rows t <= m of the generator matrix go to the
/// unit rows (I_m | 0); rows t > m go to (0 | theta_t). The image lives in
/// signature (0, n, N-m) with copies relabelled t -> t-m.
inline SuperPolynomial specialize_R(const SuperPolynomial& f) {
    const auto& sig = f.signature();
    if (sig.N < sig.m) throw std::invalid_argument("specialize_R requires N >= m");
    if (sig.N == sig.m) {
        // Lambda_0 = C; represent in signature (0, n, 1) as constants.
        AlgebraSignature target(0, sig.n, 1);
        Substitution s(sig, target);
        for (int t = 1; t <= sig.N; ++t)
            for (int i = 1; i <= sig.m; ++i)
                s.set(i, t, i == t ? SuperPolynomial::one(target) : SuperPolynomial(target));
        return s.apply(f);
    }
    AlgebraSignature target(0, sig.n, sig.N - sig.m);
    Substitution s(sig, target);
    for (int t = 1; t <= sig.N; ++t) {
        for (int a = 1; a <= sig.dim(); ++a) {
            if (t <= sig.m) {
                if (a == t) s.set(a, t, SuperPolynomial::one(target));
            } else if (a > sig.m) {
                s.set(a, t, SuperPolynomial::theta(target, a - sig.m, t - sig.m));
            }
        }
    }
    return s.apply(f);
}

/// Element (g0, g1) of O(V_0) x Sp(V_1) (or, more generally, of GL(m) x GL(2n)).
struct GroupElement {
    ScalarMatrix g0;
    ScalarMatrix g1;

    static GroupElement identity(int m, int n) {
        return GroupElement{ScalarMatrix::identity(m), ScalarMatrix::identity(2 * n)};
    }

    /// diag(-1, 1, ..., 1) on the even part, identity on the odd part.
    static GroupElement reflection(int m, int n) {
        GroupElement g = identity(m, n);
        if (m == 0) throw std::invalid_argument("reflection needs m >= 1");
        g.g0(0, 0) = Scalar(-1);
        return g;
    }

    ScalarMatrix block() const { return ScalarMatrix::block_diag(g0, g1); }

    bool is_orthogonal() const { return g0.transpose() * g0 == ScalarMatrix::identity(g0.rows()); }

    bool is_symplectic() const {
        int n = g1.rows() / 2;
        auto eta = MetricData::standard(0, n).eta;
        return g1.transpose() * eta * g1 == eta;
    }

    bool in_osp0() const { return is_orthogonal() && is_symplectic(); }

    Scalar det0() const { return g0.det(); }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return GroupElement{a.g0 * b.g0, a.g1 * b.g1};
    }
};

/// Contragredient action on coordinate functions: the generator column
/// (X^1_t, ..., X^{m+2n}_t)^T of every copy is replaced by g^{-1} times it,
/// so that group_action(g*h, f) = group_action(g, group_action(h, f)).
inline SuperPolynomial group_action(const GroupElement& g, const SuperPolynomial& f) {
    const auto& sig = f.signature();
    if (g.g0.rows() != sig.m || g.g0.cols() != sig.m || g.g1.rows() != 2 * sig.n || g.g1.cols() != 2 * sig.n) {
        throw std::invalid_argument("group element is not block-compatible with " + sig.to_string());
    }
    auto inv = g.block().inverse();
    if (!inv) throw std::invalid_argument("group element is not invertible");
    Substitution s(sig, sig);
    for (int t = 1; t <= sig.N; ++t) {
        for (int a = 1; a <= sig.dim(); ++a) {
            SuperPolynomial img(sig);
            for (int b = 1; b <= sig.dim(); ++b) {
                const Scalar& c = (*inv)(a - 1, b - 1);
                if (c.is_zero()) continue;
                // blocks keep parity: off-diagonal blocks of inv are zero
                img += c * SuperPolynomial::generator(sig, b, t);
            }
            s.set(a, t, std::move(img));
        }
    }
    return s.apply(f);
}

}  // namespace ospinv
