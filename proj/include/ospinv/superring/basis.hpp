#pragma once

#include "ospinv/superring/monomial.hpp"
#include "ospinv/superring/signature.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

namespace detail {

/// All monomials of copy t with degree d (exponents and odd bits of that copy only).
inline std::vector<Monomial> copy_monomials(const AlgebraSignature& sig, int t, int d) {
    std::vector<Monomial> out;
    int odd_rows = 2 * sig.n;
    for (int k = 0; k <= std::min(odd_rows, d); ++k) {
        int even_deg = d - k;
        if (sig.m == 0 && even_deg > 0) continue;
        // odd subsets of size k among the copy's odd rows
        std::vector<uint64_t> subsets;
        std::function<void(int, int, uint64_t)> pick = [&](int start, int left, uint64_t mask) {
            if (left == 0) {
                subsets.push_back(mask);
                return;
            }
            for (int r = start; r <= odd_rows - left; ++r) {
                pick(r + 1, left - 1, mask | (uint64_t(1) << sig.odd_bit(sig.m + 1 + r, t)));
            }
        };
        pick(0, k, 0);
        // even exponent vectors of size m summing to even_deg
        std::vector<std::vector<int>> exps;
        std::vector<int> cur(size_t(sig.m), 0);
        std::function<void(int, int)> fill = [&](int i, int left) {
            if (i == sig.m - 1) {
                cur[i] = left;
                exps.push_back(cur);
                return;
            }
            for (int e = left; e >= 0; --e) {
                cur[i] = e;
                fill(i + 1, left - e);
            }
        };
        if (sig.m == 0) {
            exps.push_back({});
        } else {
            fill(0, even_deg);
        }
        for (const auto& ev : exps) {
            Monomial base;
            for (int i = 0; i < sig.m; ++i)
                if (ev[i] > 0) base.set_exponent(sig.even_slot(i + 1, t), ev[i]);
            for (uint64_t mask : subsets) {
                Monomial mono = base;
                for (uint64_t rest = mask; rest != 0; rest &= rest - 1) mono = mono.with_odd(std::countr_zero(rest));
                out.push_back(mono);
            }
        }
    }
    return out;
}

}  // namespace detail

/// Monomial basis of the multidegree component S^{(d_1, ..., d_N)}(N).
/// Throws when the component has more than `cap` elements.
inline std::vector<Monomial> monomials_of_multidegree(const AlgebraSignature& sig, const std::vector<int>& degs,
                                                      size_t cap = 20000) {
    if (int(degs.size()) != sig.N) throw std::invalid_argument("multidegree length must equal N");
    std::vector<Monomial> out{Monomial()};
    for (int t = 1; t <= sig.N; ++t) {
        auto part = detail::copy_monomials(sig, t, degs[t - 1]);
        std::vector<Monomial> next;
        if (out.size() * part.size() > cap) {
            throw std::length_error("graded component exceeds the cap of " + std::to_string(cap) + " monomials");
        }
        next.reserve(out.size() * part.size());
        for (const auto& a : out)
            for (const auto& b : part) next.push_back(Monomial::mul(a, b).second);
        out = std::move(next);
    }
    return out;
}

/// All multidegrees of total degree d with N parts.
inline std::vector<std::vector<int>> compositions(int d, int N) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(size_t(N), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == N - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    rec(0, d);
    return out;
}

/// Monomial basis of all components of total degree <= max_degree.
inline std::vector<Monomial> monomials_up_to_degree(const AlgebraSignature& sig, int max_degree,
                                                    size_t cap = 200000) {
    std::vector<Monomial> out;
    for (int d = 0; d <= max_degree; ++d) {
        for (const auto& md : compositions(d, sig.N)) {
            auto part = monomials_of_multidegree(sig, md, cap);
            out.insert(out.end(), part.begin(), part.end());
            if (out.size() > cap) throw std::length_error("monomial basis exceeds cap");
        }
    }
    return out;
}

}  // namespace ospinv
