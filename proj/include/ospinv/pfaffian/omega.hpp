#pragma once

#include "ospinv/pfaffian/invariants.hpp"
#include "ospinv/superring/localized.hpp"
#include "ospinv/superring/serialize.hpp"
#include "ospinv/superring/substitution.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

/// Delta = det(x^i_j); only defined when N == m.
inline SuperPolynomial delta(const AlgebraSignature& sig) { return delta_of(sig); }

/// binom(alpha, k) = (1/k!) prod_{j<k} (alpha - j), alpha = num / den.
inline Scalar binom_rational(const Rational& alpha, int k) {
    Rational r(1);
    for (int j = 0; j < k; ++j) r = r * (alpha - Rational(j)) / Rational(j + 1);
    return Scalar(r);
}

struct ZetaF {
    SuperPolynomial zeta;  ///< det Q - Delta^2
    int K = 0;             ///< least K with zeta^{K+1} = 0
    LocalizedElement F;    ///< sum_{k<=K} binom(1/2, k) (zeta / Delta^2)^k
    std::vector<SuperPolynomial> zeta_powers;  ///< zeta^0 .. zeta^K
};

inline ZetaF zeta_and_F(const AlgebraSignature& sig) {
    if (sig.N != sig.m) throw std::invalid_argument("zeta_and_F needs N == m, got " + sig.to_string());
    ZetaF out;
    SuperPolynomial d = delta(sig);
    out.zeta = D_of(sig, sig.m) - d * d;
    int cap = sig.m * sig.n + 1;
    out.zeta_powers.push_back(SuperPolynomial::one(sig));
    while (true) {
        SuperPolynomial next = out.zeta_powers.back() * out.zeta;
        if (next.is_zero()) break;
        if (int(out.zeta_powers.size()) > cap) {
            throw std::logic_error("zeta is not nilpotent within the cap " + std::to_string(cap));
        }
        out.zeta_powers.push_back(std::move(next));
    }
    out.K = int(out.zeta_powers.size()) - 1;
    // common denominator Delta^{2K}
    SuperPolynomial d2 = d * d;
    SuperPolynomial num(sig);
    Rational half(1, 2);
    for (int k = 0; k <= out.K; ++k)
        num += binom_rational(half, k) * (out.zeta_powers[k] * d2.pow(out.K - k));
    out.F = loc_normalize(num, 2 * out.K);
    return out;
}

/// Delta^{2j+1} (1 + zeta/Delta^2)^{j + 1/2}, i.e. Delta F (det Q)^j, normalized.
inline LocalizedElement pfaffian_power(const AlgebraSignature& sig, const ZetaF& zf, int j) {
    SuperPolynomial d = delta(sig);
    SuperPolynomial d2 = d * d;
    Rational alpha = Rational(j) + Rational(1, 2);
    SuperPolynomial num(sig);
    // sum_k binom(alpha, k) zeta^k Delta^{2j+1-2k}, over Delta^{2K}
    for (int k = 0; k <= zf.K; ++k) {
        int e = 2 * j + 1 - 2 * k + 2 * zf.K;
        num += binom_rational(alpha, k) * (zf.zeta_powers[k] * d.pow(e));
    }
    return loc_normalize(num, 2 * zf.K);
}

/// True iff Delta F (det Q)^k lies in S(m).
inline bool pfaffian_membership(const AlgebraSignature& sig, int k) {
    if (k < 0) throw std::invalid_argument("membership needs k >= 0");
    return pfaffian_power(sig, zeta_and_F(sig), k).is_polynomial();
}

/// The super Pfaffian Omega = Delta F (det Q)^n in S(m) for signature (m, n, m).
inline SuperPolynomial omega(int m, int n) {
    if (m < 1) throw std::invalid_argument("omega needs m >= 1");
    AlgebraSignature sig(m, n, m);
    auto zf = zeta_and_F(sig);
    auto res = pfaffian_power(sig, zf, n);
    if (!res.is_polynomial()) {
        throw std::logic_error("Omega did not normalize to a polynomial for " + sig.to_string());
    }
    return res.numerator();
}

/// Omega with its metadata, as written by `ospinv omega` and stored in the
/// golden files.
inline nlohmann::json omega_document(int m, int n) {
    auto om = omega(m, n);
    nlohmann::json j;
    j["schema"] = 1;
    j["m"] = m;
    j["n"] = n;
    j["degree"] = om.total_degree().value_or(-1);
    j["terms"] = om.size();
    j["leading_term"] = poly_to_json(leading_term(om));
    j["omega"] = poly_to_json(om);
    return j;
}

}  // namespace ospinv
