#pragma once

#include "ospinv/pfaffian/poly_matrix.hpp"
#include "ospinv/superring/metric.hpp"
#include "ospinv/superring/polynomial.hpp"

#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ospinv {

/// p_st = sum_k x^k_s x^k_t.
inline SuperPolynomial p_elem(const AlgebraSignature& sig, int s, int t) {
    sig.check_copy(s);
    sig.check_copy(t);
    SuperPolynomial r(sig);
    for (int k = 1; k <= sig.m; ++k) r += SuperPolynomial::x(sig, k, s) * SuperPolynomial::x(sig, k, t);
    return r;
}

/// phi_st = sum_{mu,nu} theta^mu_s (eta^{-1})_{mu nu} theta^nu_t.
inline SuperPolynomial phi_elem(const AlgebraSignature& sig, int s, int t) {
    sig.check_copy(s);
    sig.check_copy(t);
    auto md = MetricData::standard(sig.m, sig.n);
    SuperPolynomial r(sig);
    for (int mu = 1; mu <= 2 * sig.n; ++mu) {
        for (int nu = 1; nu <= 2 * sig.n; ++nu) {
            const Scalar& c = md.form_inv(sig.m + mu, sig.m + nu);
            if (c.is_zero()) continue;
            r += c * (SuperPolynomial::theta(sig, mu, s) * SuperPolynomial::theta(sig, nu, t));
        }
    }
    return r;
}

/// q_st = X_s kappa^{-1} X_t^T = p_st + phi_st.
inline SuperPolynomial q_elem(const AlgebraSignature& sig, int s, int t) { return p_elem(sig, s, t) + phi_elem(sig, s, t); }

/// Q(k) = (q_ij)_{i,j <= k}.
inline PolyMatrix Q_matrix(const AlgebraSignature& sig, int k) {
    if (k < 0 || k > sig.N) throw std::out_of_range("Q(k) needs 0 <= k <= N");
    PolyMatrix r(sig, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r(i, j) = q_elem(sig, i + 1, j + 1);
    return r;
}

inline PolyMatrix P_matrix(const AlgebraSignature& sig, int k) {
    if (k < 0 || k > sig.N) throw std::out_of_range("P(k) needs 0 <= k <= N");
    PolyMatrix r(sig, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r(i, j) = p_elem(sig, i + 1, j + 1);
    return r;
}

/// D(k) = det Q(k); D(0) = 1.
inline SuperPolynomial D_of(const AlgebraSignature& sig, int k) { return det_division_free(Q_matrix(sig, k)); }

/// Caches D(k) and its powers for one signature.
class DCache {
public:
    explicit DCache(AlgebraSignature sig) : sig_(sig) {}

    const SuperPolynomial& D(int k) {
        if (k < 0 || k > sig_.N) throw std::out_of_range("D(k) needs 0 <= k <= N");
        auto& p = d_[k];
        if (p.empty()) p.push_back(D_of(sig_, k));
        return p.front();
    }

    const SuperPolynomial& power(int k, int l) {
        D(k);
        auto& p = d_[k];
        // p[0] = D(k), p[j] = D(k)^{j+1}
        if (l == 0) return one();
        while (int(p.size()) < l) p.push_back(p.back() * p.front());
        return p[l - 1];
    }

    const AlgebraSignature& signature() const { return sig_; }

private:
    const SuperPolynomial& one() {
        if (!one_) one_ = SuperPolynomial::one(sig_);
        return *one_;
    }

    AlgebraSignature sig_;
    // deque and map keep references stable as entries are added
    std::map<int, std::deque<SuperPolynomial>> d_;
    std::optional<SuperPolynomial> one_;
};

/// D_lambda = prod_i D(i)^{l_i}.
inline SuperPolynomial D_lambda(const AlgebraSignature& sig, const std::vector<int>& ell) {
    if (int(ell.size()) > sig.N) throw std::out_of_range("exponent vector longer than N");
    SuperPolynomial r = SuperPolynomial::one(sig);
    for (int i = 0; i < int(ell.size()); ++i) {
        if (ell[i] < 0) throw std::invalid_argument("negative exponent");
        if (ell[i] > 0) r = r * D_of(sig, i + 1).pow(ell[i]);
    }
    return r;
}

/// Exponents l_i with lambda = 2 sum_i l_i omega_i (lambda even).
inline std::vector<int> ell_of_even_partition(const std::vector<int>& lambda) {
    std::vector<int> ell(lambda.size(), 0);
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] % 2 != 0) throw std::invalid_argument("partition is not even");
        int next = i + 1 < lambda.size() ? lambda[i + 1] : 0;
        ell[i] = (lambda[i] - next) / 2;
    }
    return ell;
}

/// C(k, l) = prod_{j=1}^{l} 2j(m - 2n - k + 2j - 1).
inline Scalar coeff_C(int m, int n, int k, int l) {
    Scalar r(1);
    for (int j = 1; j <= l; ++j) r *= Scalar(int64_t(2) * j * (m - 2 * n - k + 2 * j - 1));
    return r;
}

/// C(lambda) = prod_{k > m} C(k, lambda_k / 2).
inline Scalar coeff_C_lambda(int m, int n, const std::vector<int>& lambda) {
    Scalar r(1);
    for (int k = m + 1; k <= int(lambda.size()); ++k) {
        if (lambda[k - 1] % 2 != 0) throw std::invalid_argument("C(lambda) needs even parts beyond row m");
        r *= coeff_C(m, n, k, lambda[k - 1] / 2);
    }
    return r;
}

}  // namespace ospinv
