#pragma once

#include "ospinv/superring/polynomial.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

/// Square matrix of even elements of S(N). Entries commute, so the usual
/// determinant expansions are valid even though the ring has nilpotents.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(AlgebraSignature sig, int k) : sig_(sig), k_(k), data_(size_t(k) * k, SuperPolynomial(sig)) {}

    static PolyMatrix identity(AlgebraSignature sig, int k) {
        PolyMatrix r(sig, k);
        for (int i = 0; i < k; ++i) r(i, i) = SuperPolynomial::one(sig);
        return r;
    }

    int size() const { return k_; }
    const AlgebraSignature& signature() const { return sig_; }

    SuperPolynomial& operator()(int i, int j) { return data_[size_t(i) * k_ + j]; }
    const SuperPolynomial& operator()(int i, int j) const { return data_[size_t(i) * k_ + j]; }

    void check_even() const {
        for (const auto& e : data_)
            if (!e.is_zero() && e.parity() != 0) throw std::invalid_argument("matrix entry is not even");
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        if (a.k_ != b.k_) throw std::invalid_argument("matrix size mismatch");
        PolyMatrix r(a.sig_, a.k_);
        for (int i = 0; i < a.k_; ++i)
            for (int j = 0; j < a.k_; ++j)
                for (int l = 0; l < a.k_; ++l) r(i, j) += a(i, l) * b(l, j);
        return r;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.k_ == b.k_ && a.data_ == b.data_; }

    /// Matrix with row i and column j removed.
    PolyMatrix minor(int i, int j) const {
        PolyMatrix r(sig_, k_ - 1);
        for (int a = 0, ra = 0; a < k_; ++a) {
            if (a == i) continue;
            for (int b = 0, rb = 0; b < k_; ++b) {
                if (b == j) continue;
                r(ra, rb) = (*this)(a, b);
                ++rb;
            }
            ++ra;
        }
        return r;
    }

    /// Leading k x k block.
    PolyMatrix leading(int k) const {
        PolyMatrix r(sig_, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) r(i, j) = (*this)(i, j);
        return r;
    }

private:
    AlgebraSignature sig_;
    int k_ = 0;
    std::vector<SuperPolynomial> data_;
};

/// Laplace expansion along rows with minors memoized by column subset.
inline SuperPolynomial det_laplace(const PolyMatrix& M) {
    M.check_even();
    int k = M.size();
    if (k == 0) return SuperPolynomial::one(M.signature());
    if (k > 20) throw std::invalid_argument("matrix too large for Laplace expansion");
    absl::flat_hash_map<uint32_t, SuperPolynomial> memo;
    // f(cols) = determinant of rows [k - |cols|, k) restricted to cols
    auto rec = [&](auto&& self, uint32_t cols) -> SuperPolynomial {
        int used = std::popcount(cols);
        if (used == 0) return SuperPolynomial::one(M.signature());
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        int row = k - used;
        SuperPolynomial acc(M.signature());
        int pos = 0;
        for (int j = 0; j < k; ++j) {
            if (!((cols >> j) & 1U)) continue;
            const auto& entry = M(row, j);
            if (!entry.is_zero()) {
                SuperPolynomial sub = self(self, cols & ~(uint32_t(1) << j));
                if (!sub.is_zero()) {
                    if (pos % 2 == 0) {
                        acc += entry * sub;
                    } else {
                        acc -= entry * sub;
                    }
                }
            }
            ++pos;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, (uint32_t(1) << k) - 1);
}

/// Signed sum over all permutations.
inline SuperPolynomial det_permutation(const PolyMatrix& M) {
    M.check_even();
    int k = M.size();
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    TermAccumulator acc;
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        SuperPolynomial prod = SuperPolynomial::one(M.signature());
        for (int i = 0; i < k && !prod.is_zero(); ++i) prod = prod * M(i, perm[i]);
        Scalar s(inv % 2 ? -1 : 1);
        for (const auto& t : prod.terms()) acc.add(t.mono, s * t.coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SuperPolynomial::from_accumulator(M.signature(), acc);
}

/// Division-free determinant: memoized Laplace up to size 8, permutation sum beyond.
inline SuperPolynomial det_division_free(const PolyMatrix& M) {
    return M.size() <= 8 ? det_laplace(M) : det_permutation(M);
}

/// adj(M)_{ji} = (-1)^{i+j} det(M without row i and column j).
inline PolyMatrix adjugate(const PolyMatrix& M) {
    M.check_even();
    int k = M.size();
    PolyMatrix r(M.signature(), k);
    if (k == 1) {
        r(0, 0) = SuperPolynomial::one(M.signature());
        return r;
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            SuperPolynomial c = det_division_free(M.minor(i, j));
            r(j, i) = (i + j) % 2 ? -c : c;
        }
    }
    return r;
}

}  // namespace ospinv
