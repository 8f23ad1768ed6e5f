#pragma once

#include "ospinv/superring/polynomial.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace ospinv {

/// Term records in canonical order:
///   {"coeff": {"re": "p/q", "im": "p/q"}, "even": [[i, t, e], ...], "odd": [[a, t], ...]}
/// Odd entries use the full row index a (m < a <= m + 2n).
inline nlohmann::json poly_to_json(const SuperPolynomial& f) {
    const auto& sig = f.signature();
    nlohmann::json out = nlohmann::json::array();
    for (const auto& term : f.terms()) {
        nlohmann::json even = nlohmann::json::array();
        for (int s = 0; s < sig.num_even(); ++s) {
            int e = term.mono.exponent(s);
            if (e > 0) even.push_back({sig.even_row(s), sig.even_copy(s), e});
        }
        nlohmann::json odd = nlohmann::json::array();
        for (int b : term.mono.odd_bits()) odd.push_back({sig.odd_row(b), sig.odd_copy(b)});
        out.push_back({{"coeff", {{"re", term.coeff.re().to_string()}, {"im", term.coeff.im().to_string()}}},
                       {"even", std::move(even)},
                       {"odd", std::move(odd)}});
    }
    return out;
}

/// Inverse of poly_to_json. Odd entries may appear in any order; the sign of
/// reordering them is applied.
inline SuperPolynomial poly_from_json(const AlgebraSignature& sig, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of term records");
    TermAccumulator acc;
    for (const auto& rec : j) {
        Scalar c(Rational::parse(rec.at("coeff").at("re").get<std::string>()),
                 Rational::parse(rec.at("coeff").at("im").get<std::string>()));
        SuperPolynomial term = SuperPolynomial::constant(sig, c);
        for (const auto& e : rec.at("even")) {
            int i = e.at(0).get<int>();
            int t = e.at(1).get<int>();
            int p = e.at(2).get<int>();
            if (i < 1 || i > sig.m) throw std::invalid_argument("even record row out of range");
            term = term * SuperPolynomial::x(sig, i, t).pow(p);
        }
        for (const auto& o : rec.at("odd")) {
            int a = o.at(0).get<int>();
            int t = o.at(1).get<int>();
            if (a <= sig.m) throw std::invalid_argument("odd record row must exceed m");
            term = term * SuperPolynomial::generator(sig, a, t);
        }
        for (const auto& t : term.terms()) acc.add(t.mono, t.coeff);
    }
    return SuperPolynomial::from_accumulator(sig, acc);
}

}  // namespace ospinv
