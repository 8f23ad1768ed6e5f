#pragma once

#include "ospinv/decomp/linalg.hpp"
#include "ospinv/diffops/generators.hpp"
#include "ospinv/parallel.hpp"
#include "ospinv/superring/basis.hpp"
#include "ospinv/superring/substitution.hpp"

#include <vector>

namespace ospinv {

/// osp(V)-invariants of one graded component, split by the reflection into
/// OSp(V)-invariants (+1) and pseudo invariants (-1).
struct GradedInvariants {
    int dim_kernel = 0;
    int dim_inv = 0;
    int dim_pseudo = 0;
    std::vector<SuperPolynomial> inv_basis;
    std::vector<SuperPolynomial> pseudo_basis;
};

/// Kernel of all J_ab (a <= b) on the component of the given multidegree.
inline std::vector<SuperPolynomial> osp_kernel(const AlgebraSignature& sig, const std::vector<int>& multidegree,
                                               int threads = 1) {
    auto basis = monomials_of_multidegree(sig, multidegree);
    MonomialIndex idx(basis);
    auto Js = all_J(sig);
    int B = int(basis.size());
    // column c holds the images of basis[c] under every J
    auto columns = parallel_map<std::vector<std::pair<int, SparseVector>>>(
        basis.size(), threads, [&](size_t c) {
            std::vector<std::pair<int, SparseVector>> col;
            auto f = SuperPolynomial::from_monomial(sig, basis[c]);
            for (size_t j = 0; j < Js.size(); ++j) {
                SparseVector v;
                auto image = Js[j].apply(f);
                for (const auto& t : image.terms()) {
                    int r = idx.find(t.mono);
                    if (r < 0) throw std::logic_error("J_ab left the graded component");
                    v.emplace(r, t.coeff);
                }
                if (!v.empty()) col.emplace_back(int(j), std::move(v));
            }
            return col;
        });
    ExactMatrix M(int(Js.size()) * B, B);
    for (int c = 0; c < B; ++c)
        for (const auto& [j, v] : columns[c])
            for (const auto& [r, x] : v) M.set(j * B + r, c, x);
    std::vector<SuperPolynomial> out;
    for (const auto& v : kernel_basis(M)) out.push_back(idx.polynomial(sig, v));
    return out;
}

inline GradedInvariants brute_graded_invariants(const AlgebraSignature& sig, const std::vector<int>& multidegree,
                                                int threads = 1) {
    GradedInvariants r;
    auto kernel = osp_kernel(sig, multidegree, threads);
    r.dim_kernel = int(kernel.size());
    if (sig.m == 0) {
        r.dim_inv = r.dim_kernel;
        r.inv_basis = std::move(kernel);
        return r;
    }
    auto g = GroupElement::reflection(sig.m, sig.n);
    MonomialIndex idx;
    RowSpace plus, minus;
    for (const auto& v : kernel) {
        auto gv = group_action(g, v);
        auto p = v + gv;
        auto q = v - gv;
        if (!p.is_zero() && plus.add(idx.vectorize(p))) r.inv_basis.push_back(p);
        if (!q.is_zero() && minus.add(idx.vectorize(q))) r.pseudo_basis.push_back(q);
    }
    r.dim_inv = plus.rank();
    r.dim_pseudo = minus.rank();
    if (r.dim_inv + r.dim_pseudo != r.dim_kernel) throw std::logic_error("reflection split does not add up");
    return r;
}

/// Same, summed over all multidegrees of total degree d.
inline GradedInvariants brute_invariants_of_degree(const AlgebraSignature& sig, int d, int threads = 1) {
    GradedInvariants total;
    for (const auto& md : compositions(d, sig.N)) {
        auto r = brute_graded_invariants(sig, md, threads);
        total.dim_kernel += r.dim_kernel;
        total.dim_inv += r.dim_inv;
        total.dim_pseudo += r.dim_pseudo;
        for (auto& f : r.inv_basis) total.inv_basis.push_back(std::move(f));
        for (auto& f : r.pseudo_basis) total.pseudo_basis.push_back(std::move(f));
    }
    return total;
}

/// Rank of a family of polynomials.
inline int span_rank(const std::vector<SuperPolynomial>& fs) {
    MonomialIndex idx;
    RowSpace rs;
    for (const auto& f : fs) rs.add(idx.vectorize(f));
    return rs.rank();
}

/// True when span(a) == span(b).
inline bool same_span(const std::vector<SuperPolynomial>& a, const std::vector<SuperPolynomial>& b) {
    MonomialIndex idx;
    RowSpace ra, rab;
    for (const auto& f : a) {
        auto v = idx.vectorize(f);
        ra.add(v);
        rab.add(v);
    }
    RowSpace rb;
    for (const auto& f : b) {
        auto v = idx.vectorize(f);
        rb.add(v);
        rab.add(v);
    }
    return ra.rank() == rb.rank() && rab.rank() == ra.rank();
}

}  // namespace ospinv
