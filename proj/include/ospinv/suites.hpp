#pragma once

#include "ospinv/decomp.hpp"
#include "ospinv/diffops.hpp"
#include "ospinv/parallel.hpp"
#include "ospinv/pfaffian.hpp"
#include "ospinv/report.hpp"
#include "ospinv/superring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ospinv {

/// Parameters shared by the verification suites. Unset values fall back to
/// each suite's default range.
struct SuiteOptions {
    std::optional<int> m;
    std::optional<int> n;
    std::optional<int> bign;
    std::optional<int> power;
    std::optional<int> degree;
    std::optional<int> max_k;
    std::optional<int> max_ell;
    int threads = 1;
};

struct SuiteResult {
    std::vector<Check> checks;
    std::vector<std::string> observations;
};

namespace suites {

using MN = std::vector<std::pair<int, int>>;

inline MN pick(const SuiteOptions& o, MN defaults) {
    if (o.m || o.n) return {{o.m.value_or(1), o.n.value_or(1)}};
    return defaults;
}

inline nlohmann::json mn_params(int m, int n) { return {{"m", m}, {"n", n}}; }

inline SuiteResult identities(const SuiteOptions& o) {
    IdentityParams p;
    p.mn = pick(o, p.mn);
    p.max_N = o.bign.value_or(4);
    p.max_ell = o.max_ell.value_or(3);
    p.max_k = o.max_k.value_or(0);
    p.threads = o.threads;
    return {identity_suite(p), {}};
}

/// J_ab(Omega) = 0, pi(Omega) = Delta^{2n+1}, Omega^2 = (det Q)^{2n+1},
/// degree m(2n+1), highest weight (2n+1) omega_m for N in {m, m+1}.
inline SuiteResult invariance(const SuiteOptions& o) {
    auto cells = pick(o, {{1, 0}, {1, 1}, {2, 1}, {1, 2}});
    auto parts = parallel_map<std::vector<Check>>(cells.size(), o.threads, [&](size_t i) {
        auto [m, n] = cells[i];
        std::vector<Check> out;
        AlgebraSignature sig(m, n, m);
        auto om = omega(m, n);
        auto p = mn_params(m, n);
        std::string failing;
        for (int a = 1; a <= sig.dim(); ++a)
            for (int b = a; b <= sig.dim(); ++b)
                if (!op_J(sig, a, b).apply(om).is_zero()) failing += " J(" + std::to_string(a) + "," + std::to_string(b) + ")";
        out.push_back(Check::of("omega.invariant", p, failing.empty(), failing.empty() ? "" : "nonzero:" + failing));
        out.push_back(Check::of("omega.leading-term", p, leading_term(om) == delta(sig).pow(2 * n + 1)));
        out.push_back(Check::of("omega.square", p, om * om == D_of(sig, m).pow(2 * n + 1)));
        auto deg = om.total_degree();
        out.push_back(Check::of("omega.degree", p, deg && *deg == m * (2 * n + 1) && om.is_even(),
                                "degree " + (deg ? std::to_string(*deg) : std::string("mixed"))));
        for (int N = m; N <= m + 1; ++N) {
            auto q = p;
            q["N"] = N;
            auto hw = highest_weight(embed(om, N));
            std::vector<int> expected(size_t(N), 0);
            for (int t = 0; t < m; ++t) expected[t] = 2 * n + 1;
            out.push_back(Check::of("omega.highest-weight", q, hw && *hw == expected));
        }
        return out;
    });
    SuiteResult r;
    for (auto& v : parts) r.checks.insert(r.checks.end(), v.begin(), v.end());
    return r;
}

/// Elements of O(m) x Sp(2n) used for the pseudo-invariance checks: the
/// reflection, a symplectic transvection, eta itself and, for m >= 2, a
/// rational rotation.
inline std::vector<std::pair<std::string, GroupElement>> sample_group_elements(int m, int n) {
    std::vector<std::pair<std::string, GroupElement>> out;
    out.emplace_back("reflection", GroupElement::reflection(m, n));
    if (n >= 1) {
        auto g = GroupElement::identity(m, n);
        g.g1(0, n) = Scalar(1);
        out.emplace_back("symplectic-transvection", g);
        auto h = GroupElement::identity(m, n);
        h.g1 = MetricData::standard(0, n).eta;
        out.emplace_back("symplectic-eta", h);
    } else {
        out.emplace_back("symplectic-identity", GroupElement::identity(m, n));
    }
    if (m >= 2) {
        auto g = GroupElement::identity(m, n);
        g.g0(0, 0) = Scalar::frac(3, 5);
        g.g0(0, 1) = Scalar::frac(-4, 5);
        g.g0(1, 0) = Scalar::frac(4, 5);
        g.g0(1, 1) = Scalar::frac(3, 5);
        out.emplace_back("rotation", g);
    }
    return out;
}

inline SuiteResult pseudo(const SuiteOptions& o) {
    auto cells = pick(o, {{1, 0}, {1, 1}, {2, 1}, {1, 2}});
    SuiteResult r;
    for (auto [m, n] : cells) {
        auto om = omega(m, n);
        for (const auto& [name, g] : sample_group_elements(m, n)) {
            auto p = mn_params(m, n);
            p["element"] = name;
            Scalar det = g.det0();
            bool ok = g.in_osp0() && group_action(g, om) == det * om;
            r.checks.push_back(Check::of("omega.group-action", p, ok, "det(g0) = " + det.to_string()));
        }
    }
    return r;
}

/// Delta F (det Q)^k lies in S exactly when k >= n.
inline SuiteResult regular_singular(const SuiteOptions& o) {
    MN cells;
    if (o.m || o.n) {
        cells = {{o.m.value_or(1), o.n.value_or(1)}};
    } else {
        cells = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    }
    SuiteResult r;
    for (auto [m, n] : cells) {
        AlgebraSignature sig(m, n, m);
        auto zf = zeta_and_F(sig);
        int kmax = o.max_k.value_or(n + 1);
        for (int k = 0; k <= kmax; ++k) {
            auto p = mn_params(m, n);
            p["k"] = k;
            bool member = pfaffian_power(sig, zf, k).is_polynomial();
            r.checks.push_back(Check::of("membership", p, member == (k >= n),
                                         std::string("in S: ") + (member ? "yes" : "no")));
        }
        auto p = mn_params(m, n);
        auto xd = specialize_xi(delta(sig));
        AlgebraSignature w(0, n, 1);
        bool ok = xd.size() == 1 && xd.count(1) && xd[1] == SuperPolynomial::one(w);
        r.checks.push_back(Check::of("xi.Delta", p, ok));
        auto xq = specialize_xi(D_of(sig, m));
        bool okq = xq.size() == 2 && xq.count(2) && xq[2] == SuperPolynomial::one(w) && xq.count(0) &&
                   !xq[0].pow(n).is_zero() && xq[0].pow(n + 1).is_zero();
        r.checks.push_back(Check::of("xi.detQ", p, okq, xq.count(0) ? "nu = " + xq[0].to_string() : ""));
    }
    return r;
}

inline SuiteResult osp22(const SuiteOptions&) {
    auto res = omega_osp22_integral();
    SuiteResult r{res.checks, res.observations};
    r.observations.push_back("integral (real coordinates) = " + std::to_string(res.sign) + " * (" +
                             (res.jacobian * res.jacobian * res.jacobian).to_string() + ") * Omega");
    return r;
}

inline long long sum_dims(const std::vector<Partition>& ps, int N) {
    long long s = 0;
    for (const auto& p : ps) s += dim_glN(p, N);
    return s;
}

inline nlohmann::json partitions_json(const std::vector<Partition>& ps) {
    auto j = nlohmann::json::array();
    for (const auto& p : ps) j.push_back(p.parts());
    return j;
}

/// Brute invariant and pseudo-invariant dimensions per degree against the
/// gl_N decompositions; highest weight vectors D_lambda.
inline SuiteResult decomposition(const SuiteOptions& o) {
    SuiteResult r;
    std::vector<std::tuple<int, int, int, int>> cells;  // m, n, N, d_max
    if (o.m || o.n || o.bign) {
        cells.emplace_back(o.m.value_or(1), o.n.value_or(1), o.bign.value_or(2), o.degree.value_or(7));
    } else {
        cells.emplace_back(1, 1, 2, o.degree.value_or(7));
        cells.emplace_back(2, 1, 1, o.degree.value_or(4));
    }
    for (auto [m, n, N, dmax] : cells) {
        AlgebraSignature sig(m, n, N);
        std::vector<int> ds(static_cast<size_t>(dmax) + 1);
        std::iota(ds.begin(), ds.end(), 0);
        auto per_degree = parallel_map<std::vector<Check>>(ds.size(), o.threads, [&](size_t i) {
            int d = ds[i];
            std::vector<Check> out;
            auto brute = brute_invariants_of_degree(sig, d);
            nlohmann::json p{{"m", m}, {"n", n}, {"N", N}, {"d", d}};
            auto even = enumerate_partitions(d, N, PartitionFilter::EvenHook, m, n);
            long long fi = sum_dims(even, N);
            auto q = p;
            q["lambda"] = partitions_json(even);
            q["formula"] = fi;
            q["brute"] = brute.dim_inv;
            out.push_back(Check::of("decomposition.invariant", q, fi == brute.dim_inv));
            auto pa = enumerate_partitions(d, N, PartitionFilter::PseudoAdmissible, m, n);
            long long fp = sum_dims(pa, N);
            q = p;
            q["lambda"] = partitions_json(pa);
            q["formula"] = fp;
            q["brute"] = brute.dim_pseudo;
            if (N < m) {
                out.push_back(Check::of("small-k", q, brute.dim_pseudo == 0));
            } else {
                out.push_back(Check::of("decomposition.pseudo", q, fp == brute.dim_pseudo));
            }
            for (const auto& lam : even) {
                auto ell = ell_of_even_partition(lam.parts());
                auto D = D_lambda(sig, ell);
                auto hw = highest_weight(D);
                std::vector<int> expected(size_t(N), 0);
                for (int t = 1; t <= N; ++t) expected[t - 1] = lam[t];
                auto h = p;
                h["lambda"] = lam.parts();
                out.push_back(Check::of("decomposition.D_lambda", h, hw && *hw == expected && is_osp_invariant(D)));
            }
            return out;
        });
        for (auto& v : per_degree) r.checks.insert(r.checks.end(), v.begin(), v.end());
    }
    return r;
}

/// Tensor invariants of V^{(x)N} for N <= power, Brauer spans, Gamma^0.
inline SuiteResult tensor(const SuiteOptions& o) {
    int m = o.m.value_or(1);
    int n = o.n.value_or(1);
    int P = o.power.value_or(5);
    SuiteResult r;
    std::vector<int> Ns(static_cast<size_t>(P));
    std::iota(Ns.begin(), Ns.end(), 1);
    auto parts = parallel_map<std::vector<Check>>(Ns.size(), o.threads, [&](size_t i) {
        int N = Ns[i];
        std::vector<Check> out;
        auto t = tensor_invariants(m, n, N);
        nlohmann::json p{{"m", m}, {"n", n}, {"N", N}};
        long long fi = 0, fp = 0;
        for (const auto& mu : enumerate_partitions(N, N, PartitionFilter::EvenHook, m, n)) fi += f_mu(mu);
        for (const auto& mu : enumerate_partitions(N, N, PartitionFilter::PseudoAdmissible, m, n)) fp += f_mu(mu);
        auto q = p;
        q["formula"] = fi;
        q["brute"] = t.dim_inv;
        out.push_back(Check::of("tensor.invariant", q, fi == t.dim_inv));
        q["formula"] = fp;
        q["brute"] = t.dim_pseudo;
        out.push_back(Check::of("tensor.pseudo", q, fp == t.dim_pseudo));
        if (N % 2 == 1) out.push_back(Check::of("tensor.odd-vanishing", p, t.dim_inv == 0));
        std::vector<SuperPolynomial> inv, ps;
        for (const auto& v : t.inv_basis) inv.push_back(iota(v));
        for (const auto& v : t.pseudo_basis) ps.push_back(iota(v));
        if (N % 2 == 0) {
            auto b = brauer_span(m, n, N);
            out.push_back(Check::of("tensor.brauer", p, same_span(b, inv),
                                    "brauer rank " + std::to_string(b.size())));
        }
        // stability under the signed transpositions
        AlgebraSignature sig(m, n, N);
        bool stable = true;
        for (int a = 1; a < N && stable; ++a) {
            std::vector<int> perm(static_cast<size_t>(N));
            std::iota(perm.begin(), perm.end(), 1);
            std::swap(perm[a - 1], perm[a]);
            auto s = copy_permutation(sig, perm);
            for (const auto* basis : {&inv, &ps}) {
                std::vector<SuperPolynomial> moved;
                for (const auto& f : *basis) moved.push_back(s.apply(f));
                if (!same_span(moved, *basis)) stable = false;
            }
        }
        out.push_back(Check::of("tensor.sigma-stable", p, stable));
        return out;
    });
    for (auto& v : parts) r.checks.insert(r.checks.end(), v.begin(), v.end());

    int rc = m * (2 * n + 1);
    if (m >= 1 && rc <= P) {
        nlohmann::json p{{"m", m}, {"n", n}, {"r_c", rc}};
        auto g0 = gamma0(m, n);
        std::vector<int> rect(size_t(m), 2 * n + 1);
        long long f = f_mu(Partition(rect));
        r.checks.push_back(Check::of("gamma0.dimension", p, (long long)g0.size() == f,
                                     std::to_string(g0.size()) + " vs f = " + std::to_string(f)));
        auto pseudo_space = tensor_invariants(m, n, rc);
        std::vector<SuperPolynomial> pb, gb;
        for (const auto& v : pseudo_space.pseudo_basis) pb.push_back(iota(v));
        for (const auto& v : g0) gb.push_back(iota(v));
        auto all = pb;
        all.insert(all.end(), gb.begin(), gb.end());
        r.checks.push_back(Check::of("gamma0.pseudo", p, span_rank(all) == span_rank(pb)));
        bool harmonic = true;
        for (const auto& v : g0)
            for (int i = 1; i <= rc; ++i)
                for (int j = i + 1; j <= rc; ++j)
                    if (!contraction(i, j, v).is_zero()) harmonic = false;
        r.checks.push_back(Check::of("gamma0.harmonic", p, harmonic));
    }
    return r;
}

/// Generation by Gamma(N) and the q_ij; dim Gamma(N) against the formula.
inline SuiteResult generation(const SuiteOptions& o) {
    SuiteResult r;
    std::vector<std::tuple<int, int, int>> cells;
    if (o.m || o.n || o.bign) {
        cells.emplace_back(o.m.value_or(1), o.n.value_or(1), o.bign.value_or(2));
    } else {
        cells = {{1, 1, 1}, {1, 1, 2}};
    }
    int dmax = o.degree.value_or(7);
    for (auto [m, n, N] : cells) {
        auto v = verify_generation(m, n, N, dmax, o.threads);
        r.checks.insert(r.checks.end(), v.begin(), v.end());
    }
    std::vector<std::tuple<int, int, int>> dims;
    if (o.m || o.n || o.bign) {
        dims = cells;
    } else {
        dims = {{1, 1, 2}, {1, 1, 3}};
    }
    for (auto [m, n, N] : dims) {
        nlohmann::json p{{"m", m}, {"n", n}, {"N", N}};
        long long f = dim_gamma(N, m, n);
        auto g = gamma_space(m, n, N);
        bool inv = std::all_of(g.basis.begin(), g.basis.end(), [](const SuperPolynomial& x) { return is_osp_invariant(x); });
        r.checks.push_back(Check::of("gamma.dimension", p, f > 0 && (long long)g.basis.size() == f,
                                     "formula " + std::to_string(f) + ", rank " + std::to_string(g.basis.size())));
        r.checks.push_back(Check::of("gamma.invariant", p, inv));
    }
    return r;
}

/// Operator coordinates: values on every monomial of degree <= max_degree.
class OperatorCoordinates {
public:
    OperatorCoordinates(const AlgebraSignature& sig, int max_degree)
        : sig_(sig), basis_(monomials_up_to_degree(sig, max_degree)), index_(basis_) {}

    SparseVector operator()(const LinearOperator& A) const {
        SparseVector v;
        long long K = index_.size();
        for (size_t c = 0; c < basis_.size(); ++c) {
            auto image = A.apply(SuperPolynomial::from_monomial(sig_, basis_[c]));
            for (const auto& t : image.terms()) {
                int j = index_.find(t.mono);
                if (j < 0) throw std::logic_error("operator raised the degree beyond the basis");
                v.emplace(int(c * K + j), t.coeff);
            }
        }
        return v;
    }

private:
    AlgebraSignature sig_;
    std::vector<Monomial> basis_;
    MonomialIndex index_;
};

/// gl_N relations, closure of the J_ab under the super bracket, and
/// commutation of the Laplacians with the J_ab.
inline SuiteResult structure(const SuiteOptions& o) {
    int m = o.m.value_or(1), n = o.n.value_or(1), N = o.bign.value_or(2);
    int deg = o.degree.value_or(3);
    AlgebraSignature sig(m, n, N);
    nlohmann::json p{{"m", m}, {"n", n}, {"N", N}, {"degree", deg}};
    SuiteResult r;

    bool gl_ok = true;
    std::string gl_detail;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    auto lhs = super_bracket(op_E(sig, i, j), op_E(sig, k, l));
                    LinearOperator rhs(sig);
                    if (j == k) rhs = rhs + op_E(sig, i, l);
                    if (l == i) rhs = rhs - op_E(sig, k, j);
                    if (!operators_equal(lhs, rhs, deg) && gl_ok) {
                        gl_ok = false;
                        gl_detail = "fails at (" + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                                    std::to_string(l) + ")";
                    }
                }
    r.checks.push_back(Check::of("structure.gl-relations", p, gl_ok, gl_detail));

    OperatorCoordinates coords(sig, deg);
    auto Js = all_J(sig);
    RowSpace span;
    for (const auto& J : Js) span.add(coords(J));
    bool closed = true;
    std::string closure_detail;
    for (size_t a = 0; a < Js.size(); ++a)
        for (size_t b = a; b < Js.size(); ++b)
            if (!span.contains(coords(super_bracket(Js[a], Js[b]))) && closed) {
                closed = false;
                closure_detail = "[" + Js[a].name() + ", " + Js[b].name() + "] outside span";
            }
    r.checks.push_back(Check::of("structure.J-closure", p, closed, closure_detail));

    int lap_deg = deg + 1;
    auto q = p;
    q["degree"] = lap_deg;
    bool commute = true;
    std::string lap_detail;
    for (int s = 1; s <= N; ++s)
        for (int t = 1; t <= N; ++t) {
            auto L = laplacian_op(sig, s, t);
            for (const auto& J : Js)
                if (!operators_equal(super_bracket(L, J), LinearOperator(sig), lap_deg) && commute) {
                    commute = false;
                    lap_detail = "[Laplacian(" + std::to_string(s) + "," + std::to_string(t) + "), " + J.name() + "] != 0";
                }
        }
    r.checks.push_back(Check::of("structure.laplacian-commutes", q, commute, lap_detail));
    return r;
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"identities", "invariance",    "pseudo",     "regular-singular",
                                                   "osp22",      "decomposition", "tensor",     "generation",
                                                   "structure"};
    return names;
}

/// Runs a suite by name; checks are ordered by name (stable within a name).
inline SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
    SuiteResult r;
    if (name == "identities") {
        r = suites::identities(o);
    } else if (name == "invariance") {
        r = suites::invariance(o);
    } else if (name == "pseudo") {
        r = suites::pseudo(o);
    } else if (name == "regular-singular") {
        r = suites::regular_singular(o);
    } else if (name == "osp22") {
        r = suites::osp22(o);
    } else if (name == "decomposition") {
        r = suites::decomposition(o);
    } else if (name == "tensor") {
        r = suites::tensor(o);
    } else if (name == "generation") {
        r = suites::generation(o);
    } else if (name == "structure") {
        r = suites::structure(o);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    std::stable_sort(r.checks.begin(), r.checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
    return r;
}

}  // namespace ospinv
