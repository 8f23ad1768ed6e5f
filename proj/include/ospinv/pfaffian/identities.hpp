#pragma once

#include "ospinv/diffops/generators.hpp"
#include "ospinv/parallel.hpp"
#include "ospinv/pfaffian/invariants.hpp"
#include "ospinv/report.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ospinv {

struct IdentityParams {
    std::vector<std::pair<int, int>> mn = {{1, 1}, {2, 1}, {1, 2}, {2, 2}};
    int max_N = 4;
    int max_ell = 3;
    int max_k = 0;  ///< 0 means k <= N
    int threads = 1;
};

namespace detail {

/// X_ar = sum_c (kappa^{-1})_{ac} X^c_r.
inline SuperPolynomial lowered_generator(const AlgebraSignature& sig, const MetricData& md, int a, int r) {
    SuperPolynomial out(sig);
    for (int c = 1; c <= sig.dim(); ++c) {
        const Scalar& k = md.form_inv(a, c);
        if (!k.is_zero()) out += k * SuperPolynomial::generator(sig, c, r);
    }
    return out;
}

inline std::string mismatch(const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
    auto diff = lhs - rhs;
    std::string s = diff.to_string();
    if (s.size() > 400) s = s.substr(0, 400) + "...";
    return "lhs - rhs = " + s;
}

/// All identities for one signature (m, n, N).
inline std::vector<Check> identity_cell(int m, int n, int N, int max_ell, int max_k = 0) {
    AlgebraSignature sig(m, n, N);
    auto md = MetricData::standard(m, n);
    DCache cache(sig);
    std::vector<Check> out;
    auto base = [&]() { return nlohmann::json{{"m", m}, {"n", n}, {"N", N}}; };
    auto add = [&](const std::string& name, nlohmann::json params, const SuperPolynomial& lhs,
                   const SuperPolynomial& rhs) {
        bool ok = lhs == rhs;
        out.push_back(Check::of(name, std::move(params), ok, ok ? "" : mismatch(lhs, rhs)));
    };

    std::vector<std::vector<SuperPolynomial>> q(size_t(N) + 1, std::vector<SuperPolynomial>(size_t(N) + 1));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) q[i][j] = q_elem(sig, i, j);
    std::vector<PolyMatrix> adj(size_t(N) + 1);
    for (int k = 1; k <= N; ++k) adj[k] = adjugate(Q_matrix(sig, k));

    int kmax = max_k > 0 ? std::min(max_k, N) : N;
    for (int k = 1; k <= kmax; ++k) {
        const SuperPolynomial& Dk = cache.D(k);
        const PolyMatrix& A = adj[k];
        for (int j = 1; j <= k; ++j) {
            // d_aj D(k) = 2 sum_r X_ar adj_rj
            bool ok = true;
            std::string detail;
            for (int a = 1; a <= sig.dim() && ok; ++a) {
                SuperPolynomial rhs(sig);
                for (int r = 1; r <= k; ++r) rhs += lowered_generator(sig, md, a, r) * A(r - 1, j - 1);
                rhs = Scalar(2) * rhs;
                SuperPolynomial lhs = partial(a, j, Dk);
                if (lhs != rhs) {
                    ok = false;
                    detail = "a=" + std::to_string(a) + ": " + mismatch(lhs, rhs);
                }
            }
            auto p = base();
            p["k"] = k;
            p["j"] = j;
            out.push_back(Check::of("D-formulae-1", p, ok, detail));

            add("D-formulae-2", p, laplacian(j, j, Dk),
                Scalar(int64_t(2) * (m - 2 * n - k + 1)) * A(j - 1, j - 1));

            // E_jj(adj_jj) = 0 and E_rj(adj_rj) = -adj_jj for r != j
            add("EQ", [&] { auto pp = p; pp["r"] = j; return pp; }(), op_E(sig, j, j).apply(A(j - 1, j - 1)),
                SuperPolynomial(sig));
            for (int r = 1; r <= k; ++r) {
                if (r == j) continue;
                auto pp = p;
                pp["r"] = r;
                add("EQ", pp, op_E(sig, r, j).apply(A(r - 1, j - 1)), -A(j - 1, j - 1));
            }

            // E_ij D(k) = 2 sum_r q_ir adj_rj
            for (int i = 1; i <= N; ++i) {
                SuperPolynomial rhs(sig);
                for (int r = 1; r <= k; ++r) rhs += q[i][r] * A(r - 1, j - 1);
                auto pp = p;
                pp["i"] = i;
                add("ED", pp, op_E(sig, i, j).apply(Dk), Scalar(2) * rhs);
            }
        }

        auto lap = laplacian_op(sig, k, k);
        for (int l = 1; l <= max_ell; ++l) {
            auto p = base();
            p["k"] = k;
            p["ell"] = l;
            const SuperPolynomial& Dkl = cache.power(k, l);
            SuperPolynomial lhs = lap.apply(Dkl);
            Scalar c(int64_t(2) * l * (m - 2 * n - k + 2 * l - 1));
            add("Laplace", p, lhs, c * (cache.power(k, l - 1) * cache.D(k - 1)));

            SuperPolynomial iter = Dkl;
            for (int r = 0; r < l && !iter.is_zero(); ++r) iter = lap.apply(iter);
            add("truncation", p, iter, coeff_C(m, n, k, l) * cache.power(k - 1, l));
        }

        if (k + 1 <= N) {
            SuperPolynomial rhs = q[k + 1][k + 1] * Dk;
            SuperPolynomial sum(sig);
            for (int r = 1; r <= k; ++r) sum += q[r][k + 1] * op_E(sig, k + 1, r).apply(Dk);
            rhs -= Scalar::frac(1, 2) * sum;
            auto p = base();
            p["k"] = k;
            add("reduce", p, cache.D(k + 1), rhs);
        }
    }
    return out;
}

}  // namespace detail

/// Evaluates every identity for each (m, n) and each N <= max_N. Cells run
/// concurrently; the result order is fixed.
inline std::vector<Check> identity_suite(const IdentityParams& params) {
    std::vector<std::tuple<int, int, int>> cells;
    for (auto [m, n] : params.mn)
        for (int N = 1; N <= params.max_N; ++N) cells.emplace_back(m, n, N);
    auto results = parallel_map<std::vector<Check>>(cells.size(), params.threads, [&](size_t i) {
        auto [m, n, N] = cells[i];
        return detail::identity_cell(m, n, N, params.max_ell, params.max_k);
    });
    std::vector<Check> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

}  // namespace ospinv
