#pragma once

#include "ospinv/decomp/invariants.hpp"
#include "ospinv/decomp/partition.hpp"
#include "ospinv/decomp/tensor.hpp"
#include "ospinv/pfaffian/invariants.hpp"
#include "ospinv/pfaffian/omega.hpp"
#include "ospinv/report.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <vector>

namespace ospinv {

/// Multihomogeneous basis of Gamma(N), the gl_N module generated by Omega.
struct GammaSpace {
    AlgebraSignature sig;
    std::vector<SuperPolynomial> basis;
};

/// Breadth-first closure of {Omega} under the lowering operators E_ts, t > s,
/// tracking rank per multidegree.
inline GammaSpace gamma_space(int m, int n, int N) {
    if (N < m) throw std::invalid_argument("gamma_space needs N >= m");
    AlgebraSignature sig(m, n, N);
    long long expected = dim_gamma(N, m, n);
    GammaSpace out{sig, {}};
    std::map<std::vector<int>, std::pair<MonomialIndex, RowSpace>> spaces;
    std::deque<SuperPolynomial> queue{embed(omega(m, n), N)};
    auto add = [&](const SuperPolynomial& f) {
        auto md = f.multidegree();
        if (!md) throw std::logic_error("lowering produced a non-homogeneous element");
        auto& [idx, rs] = spaces[*md];
        if (!rs.add(idx.vectorize(f))) return;
        out.basis.push_back(f);
        if (static_cast<long long>(out.basis.size()) > expected)
            throw std::logic_error("Gamma(N) rank exceeds the dimension formula");
        queue.push_back(f);
    };
    auto start = queue.front();
    queue.clear();
    add(start);
    while (!queue.empty()) {
        auto f = std::move(queue.front());
        queue.pop_front();
        for (int s = 1; s <= N; ++s)
            for (int t = s + 1; t <= N; ++t) {
                auto g = op_E(sig, t, s).apply(f);
                if (!g.is_zero()) add(g);
            }
    }
    return out;
}

/// Gamma^0: the multidegree (1, ..., 1) slice of Gamma(r_c), r_c = m(2n+1).
inline std::vector<TensorVector> gamma0(int m, int n) {
    int rc = m * (2 * n + 1);
    check_tensor_cap(m, n, rc);
    auto space = gamma_space(m, n, rc);
    std::vector<int> ones(size_t(rc), 1);
    std::vector<TensorVector> out;
    for (const auto& f : space.basis)
        if (f.multidegree() == ones) out.push_back(iota_inverse(f));
    return out;
}

namespace detail {

/// Products of q_ij (i <= j) with the given multidegree; pairs are emitted in
/// nondecreasing order so each multiset appears once.
inline void q_monomials(const AlgebraSignature& sig, std::vector<int>& deg, std::pair<int, int> last,
                        const SuperPolynomial& acc, std::vector<SuperPolynomial>& out) {
    int t = 0;
    for (int i = 1; i <= sig.N; ++i)
        if (deg[i - 1] > 0) {
            t = i;
            break;
        }
    if (t == 0) {
        out.push_back(acc);
        return;
    }
    for (int s = t; s <= sig.N; ++s) {
        if (std::make_pair(t, s) < last) continue;
        if (s == t ? deg[t - 1] < 2 : deg[s - 1] < 1) continue;
        --deg[t - 1];
        --deg[s - 1];
        q_monomials(sig, deg, {t, s}, acc * q_elem(sig, t, s), out);
        ++deg[t - 1];
        ++deg[s - 1];
    }
}

}  // namespace detail

inline std::vector<SuperPolynomial> q_monomials(const AlgebraSignature& sig, std::vector<int> multidegree) {
    std::vector<SuperPolynomial> out;
    detail::q_monomials(sig, multidegree, {0, 0}, SuperPolynomial::one(sig), out);
    return out;
}

/// For each total degree d <= d_max, compares the brute pseudo-invariant space
/// with span{gamma * s}, gamma in Gamma(N), s a monomial in the q_ij.
inline std::vector<Check> verify_generation(int m, int n, int N, int d_max, int threads = 1) {
    AlgebraSignature sig(m, n, N);
    auto gamma = gamma_space(m, n, N);
    std::vector<int> ds(static_cast<size_t>(d_max) + 1);
    std::iota(ds.begin(), ds.end(), 0);
    return parallel_map<Check>(ds.size(), threads, [&](size_t di) {
        int d = ds[di];
        int brute_dim = 0;
        int span_dim = 0;
        bool ok = true;
        for (const auto& md : compositions(d, N)) {
            auto brute = brute_graded_invariants(sig, md);
            std::vector<SuperPolynomial> products;
            for (const auto& g : gamma.basis) {
                auto gd = *g.multidegree();
                std::vector<int> rest(md.size());
                bool fits = true;
                for (size_t t = 0; t < md.size(); ++t) {
                    rest[t] = md[t] - gd[t];
                    if (rest[t] < 0) fits = false;
                }
                if (!fits) continue;
                for (const auto& s : q_monomials(sig, rest)) products.push_back(g * s);
            }
            brute_dim += brute.dim_pseudo;
            int r = span_rank(products);
            span_dim += r;
            if (!same_span(brute.pseudo_basis, products)) ok = false;
        }
        nlohmann::json params{{"m", m}, {"n", n}, {"N", N}, {"d", d}};
        std::string detail =
            "brute pseudo dim " + std::to_string(brute_dim) + ", Gamma*q span rank " + std::to_string(span_dim);
        return Check::of("generation", params, ok, detail);
    });
}

}  // namespace ospinv
