#pragma once

#include "ospinv/superring/polynomial.hpp"
#include "ospinv/superring/substitution.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace ospinv {

namespace detail {

/// Fewer odd generators first, then the canonical order. Used to drive the
/// division so that corrections from the nilpotent part of the divisor
/// always land on terms that are processed later.
struct DivisionOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.odd_count() != b.odd_count()) return a.odd_count() < b.odd_count();
        return canonical_before(a, b);
    }
};

inline std::optional<SuperPolynomial> divide_by_single_term(const SuperPolynomial& f, const Term& d) {
    TermAccumulator acc;
    for (const auto& t : f.terms()) {
        if ((t.mono.odd_mask() & d.mono.odd_mask()) != d.mono.odd_mask()) return std::nullopt;
        if (!t.mono.even_divisible_by(d.mono)) return std::nullopt;
        Monomial u = t.mono.even_divided_by(d.mono);
        for (int b : d.mono.odd_bits()) u = u.without_odd(b);
        auto [sign, prod] = Monomial::mul(u, d.mono);
        if (sign == 0 || prod != t.mono) return std::nullopt;
        acc.add_signed(u, t.coeff / d.coeff, sign);
    }
    return SuperPolynomial::from_accumulator(f.signature(), acc);
}

}  // namespace detail

/// Exact quotient q with f = q * d, or nothing when d does not divide f.
///
/// Supported divisors: any d with a nonzero purely even part, and single
/// terms. The remainder is reduced against the leading monomial of the even
/// part of d, lowest Grassmann degree first; the answer is certified by
/// multiplying back.
inline std::optional<SuperPolynomial> exact_div(const SuperPolynomial& f, const SuperPolynomial& d) {
    require_same(f.signature(), d.signature());
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (f.is_zero()) return SuperPolynomial(f.signature());

    std::optional<SuperPolynomial> q;
    SuperPolynomial d0 = leading_term(d);
    if (d0.is_zero()) {
        if (d.size() != 1) throw std::domain_error("divisor must have a nonzero even part or be a single term");
        q = detail::divide_by_single_term(f, d.terms().front());
    } else {
        const Term& lead = d0.terms().front();
        std::map<Monomial, Scalar, detail::DivisionOrder> rem;
        for (const auto& t : f.terms()) rem.emplace(t.mono, t.coeff);
        TermAccumulator quotient;
        while (!rem.empty()) {
            auto it = rem.begin();
            if (!it->first.even_divisible_by(lead.mono)) return std::nullopt;
            Monomial u = it->first.even_divided_by(lead.mono);
            Scalar c = it->second / lead.coeff;
            quotient.add(u, c);
            for (const auto& dt : d.terms()) {
                auto [sign, prod] = Monomial::mul(u, dt.mono);
                if (sign == 0) continue;
                Scalar delta = c * dt.coeff;
                auto [pos, inserted] = rem.try_emplace(prod, Scalar());
                if (sign > 0) {
                    pos->second -= delta;
                } else {
                    pos->second += delta;
                }
                if (pos->second.is_zero()) rem.erase(pos);
            }
        }
        q = SuperPolynomial::from_accumulator(f.signature(), quotient);
    }
    if (q && !(*q * d == f)) return std::nullopt;
    return q;
}

}  // namespace ospinv
