#pragma once

#include "ospinv/diffops/operator.hpp"
#include "ospinv/superring/metric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

/// J_ab = sum_t (X_at d_bt - (-1)^{[a][b]} X_bt d_at), X_at = sum_c (kappa^{-1})_{ac} X^c_t.
inline LinearOperator op_J(const AlgebraSignature& sig, int a, int b) {
    sig.check_generator(a, 1);
    sig.check_generator(b, 1);
    auto md = MetricData::standard(sig.m, sig.n);
    Scalar sign((sig.parity(a) && sig.parity(b)) ? 1 : -1);
    LinearOperator op(sig);
    for (int t = 1; t <= sig.N; ++t) {
        for (int c = 1; c <= sig.dim(); ++c) {
            const Scalar& kac = md.form_inv(a, c);
            if (!kac.is_zero()) op = op + kac * (LinearOperator::mul(sig, c, t) * LinearOperator::deriv(sig, b, t));
            const Scalar& kbc = md.form_inv(b, c);
            if (!kbc.is_zero())
                op = op + (sign * kbc) * (LinearOperator::mul(sig, c, t) * LinearOperator::deriv(sig, a, t));
        }
    }
    return op.named("J(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

/// E_st = sum_a X^a_s d_at.
inline LinearOperator op_E(const AlgebraSignature& sig, int s, int t) {
    sig.check_copy(s);
    sig.check_copy(t);
    LinearOperator op(sig);
    for (int a = 1; a <= sig.dim(); ++a) op = op + LinearOperator::mul(sig, a, s) * LinearOperator::deriv(sig, a, t);
    return op.named("E(" + std::to_string(s) + "," + std::to_string(t) + ")");
}

enum class LaplacianPart { Full, Even, Odd };

/// d^2_st = sum_{a,b} kappa_ab d_bs d_at, optionally restricted to the even
/// (a, b <= m) or odd (a, b > m) rows.
inline LinearOperator laplacian_op(const AlgebraSignature& sig, int s, int t,
                                   LaplacianPart part = LaplacianPart::Full) {
    sig.check_copy(s);
    sig.check_copy(t);
    auto md = MetricData::standard(sig.m, sig.n);
    LinearOperator op(sig);
    for (int a = 1; a <= sig.dim(); ++a) {
        for (int b = 1; b <= sig.dim(); ++b) {
            if (part == LaplacianPart::Even && (a > sig.m || b > sig.m)) continue;
            if (part == LaplacianPart::Odd && (a <= sig.m || b <= sig.m)) continue;
            const Scalar& k = md.form(a, b);
            if (k.is_zero()) continue;
            op = op + k * (LinearOperator::deriv(sig, b, s) * LinearOperator::deriv(sig, a, t));
        }
    }
    return op.named("Lap(" + std::to_string(s) + "," + std::to_string(t) + ")");
}

inline SuperPolynomial laplacian(int s, int t, const SuperPolynomial& f, LaplacianPart part = LaplacianPart::Full) {
    return laplacian_op(f.signature(), s, t, part).apply(f);
}

/// Product over k = N, N-1, ..., m+1 of (d^2_kk)^{lambda_k / 2} applied to f.
inline SuperPolynomial nabla_lambda(const std::vector<int>& lambda, const SuperPolynomial& f) {
    const auto& sig = f.signature();
    if (int(lambda.size()) > sig.N) throw std::invalid_argument("partition longer than N");
    SuperPolynomial g = f;
    for (int k = int(lambda.size()); k > sig.m; --k) {
        int part = lambda[k - 1];
        if (part % 2 != 0) throw std::invalid_argument("nabla needs even parts beyond row m");
        if (part == 0) continue;
        auto lap = laplacian_op(sig, k, k);
        for (int r = 0; r < part / 2 && !g.is_zero(); ++r) g = lap.apply(g);
    }
    return g;
}

/// J_ab for all a <= b.
inline std::vector<LinearOperator> all_J(const AlgebraSignature& sig) {
    std::vector<LinearOperator> out;
    for (int a = 1; a <= sig.dim(); ++a)
        for (int b = a; b <= sig.dim(); ++b) out.push_back(op_J(sig, a, b));
    return out;
}

inline bool is_osp_invariant(const SuperPolynomial& f) {
    for (const auto& J : all_J(f.signature()))
        if (!J.apply(f).is_zero()) return false;
    return true;
}

/// E_tt eigenvalues when f is nonzero, a joint E_tt eigenvector and
/// annihilated by every E_st with s < t.
inline std::optional<std::vector<int>> highest_weight(const SuperPolynomial& f) {
    if (f.is_zero()) return std::nullopt;
    const auto& sig = f.signature();
    for (int s = 1; s <= sig.N; ++s)
        for (int t = s + 1; t <= sig.N; ++t)
            if (!op_E(sig, s, t).apply(f).is_zero()) return std::nullopt;
    std::vector<int> weight;
    const Term& lead = f.terms().front();
    for (int t = 1; t <= sig.N; ++t) {
        auto g = op_E(sig, t, t).apply(f);
        Scalar c = g.coefficient(lead.mono) / lead.coeff;
        if (g != c * f) return std::nullopt;
        if (!c.is_real() || !c.re().is_small() || c.re().small_den() != 1) return std::nullopt;
        weight.push_back(int(c.re().small_num()));
    }
    return weight;
}

}  // namespace ospinv
