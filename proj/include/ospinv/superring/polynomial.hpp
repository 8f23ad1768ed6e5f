#pragma once

#include "ospinv/superring/monomial.hpp"
#include "ospinv/superring/scalar.hpp"
#include "ospinv/superring/signature.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ospinv {

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Accumulates scalar multiples of monomials; used by every bilinear or
/// linear operation before the result is put back into canonical order.
class TermAccumulator {
public:
    void reserve(size_t n) { map_.reserve(n); }

    void add(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = map_.try_emplace(m, c);
        if (!inserted) it->second += c;
    }

    void add_signed(const Monomial& m, const Scalar& c, int sign) {
        if (sign > 0) {
            add(m, c);
        } else if (sign < 0) {
            add(m, -c);
        }
    }

    size_t size() const { return map_.size(); }

    std::vector<Term> take_sorted() {
        std::vector<Term> out;
        out.reserve(map_.size());
        for (auto& [m, c] : map_) {
            if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
        }
        map_.clear();
        std::sort(out.begin(), out.end(),
                  [](const Term& a, const Term& b) { return canonical_before(a.mono, b.mono); });
        return out;
    }

private:
    absl::flat_hash_map<Monomial, Scalar> map_;
};

/// Sparse element of S(N) = polynomials in the x^i_t tensored with the
/// Grassmann algebra on the theta^mu_t, with coefficients in Q(i).
/// Terms are kept in canonical order with no zero coefficients.
class SuperPolynomial {
public:
    SuperPolynomial() = default;
    explicit SuperPolynomial(AlgebraSignature sig) : sig_(sig) {}
    SuperPolynomial(AlgebraSignature sig, std::vector<Term> sorted_terms)
        : sig_(sig), terms_(std::move(sorted_terms)) {}

    static SuperPolynomial zero(AlgebraSignature sig) { return SuperPolynomial(sig); }

    static SuperPolynomial constant(AlgebraSignature sig, const Scalar& c) {
        SuperPolynomial p(sig);
        if (!c.is_zero()) p.terms_.push_back(Term{Monomial::one(), c});
        return p;
    }

    static SuperPolynomial one(AlgebraSignature sig) { return constant(sig, Scalar(1)); }

    static SuperPolynomial from_monomial(AlgebraSignature sig, const Monomial& m, const Scalar& c = Scalar(1)) {
        SuperPolynomial p(sig);
        if (!c.is_zero()) p.terms_.push_back(Term{m, c});
        return p;
    }

    /// Generator X^a_t (row a, copy t).
    static SuperPolynomial generator(AlgebraSignature sig, int a, int t) {
        sig.check_generator(a, t);
        return from_monomial(sig, generator_monomial(sig, a, t));
    }

    static Monomial generator_monomial(const AlgebraSignature& sig, int a, int t) {
        sig.check_generator(a, t);
        if (a <= sig.m) return Monomial::even_generator(sig.even_slot(a, t));
        return Monomial::odd_generator(sig.odd_bit(a, t));
    }

    /// Even generator x^i_t.
    static SuperPolynomial x(AlgebraSignature sig, int i, int t) {
        if (i < 1 || i > sig.m) throw std::out_of_range("even row out of range");
        return generator(sig, i, t);
    }

    /// Odd generator theta^mu_t, 1 <= mu <= 2n.
    static SuperPolynomial theta(AlgebraSignature sig, int mu, int t) {
        if (mu < 1 || mu > 2 * sig.n) throw std::out_of_range("odd row out of range");
        return generator(sig, sig.m + mu, t);
    }

    static SuperPolynomial from_accumulator(AlgebraSignature sig, TermAccumulator& acc) {
        return SuperPolynomial(sig, acc.take_sorted());
    }

    const AlgebraSignature& signature() const { return sig_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return canonical_before(t.mono, k); });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return Scalar();
    }

    /// 0 or 1 for homogeneous elements (zero counts as even), -1 when mixed.
    int parity() const {
        if (terms_.empty()) return 0;
        int p = terms_.front().mono.parity();
        for (const auto& t : terms_) {
            if (t.mono.parity() != p) return -1;
        }
        return p;
    }
    bool is_even() const { return parity() == 0; }

    int max_degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

    /// Common total degree, absent for zero or inhomogeneous elements.
    std::optional<int> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.front().mono.degree();
        for (const auto& t : terms_) {
            if (t.mono.degree() != d) return std::nullopt;
        }
        return d;
    }

    /// Degree of a monomial in each copy index t = 1..N.
    static std::vector<int> copy_degrees(const AlgebraSignature& sig, const Monomial& mono) {
        std::vector<int> deg(sig.N, 0);
        for (int s = 0; s < sig.num_even(); ++s) deg[sig.even_copy(s) - 1] += mono.exponent(s);
        for (int b : mono.odd_bits()) deg[sig.odd_copy(b) - 1] += 1;
        return deg;
    }

    /// Common Z_+^N degree, absent for zero or non-multihomogeneous elements.
    std::optional<std::vector<int>> multidegree() const {
        if (terms_.empty()) return std::nullopt;
        auto d = copy_degrees(sig_, terms_.front().mono);
        for (const auto& t : terms_) {
            if (copy_degrees(sig_, t.mono) != d) return std::nullopt;
        }
        return d;
    }

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        if (!(a.sig_ == b.sig_) || a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i) {
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
        }
        return true;
    }
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

    friend SuperPolynomial operator-(const SuperPolynomial& a) {
        SuperPolynomial r = a;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) { return merge(a, b, 1); }
    friend SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) { return merge(a, b, -1); }

    friend SuperPolynomial operator*(const Scalar& c, const SuperPolynomial& a) {
        if (c.is_zero()) return SuperPolynomial(a.sig_);
        SuperPolynomial r = a;
        for (auto& t : r.terms_) t.coeff = c * t.coeff;
        return r;
    }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const Scalar& c) { return c * a; }

    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) { return multiply(a, b); }

    SuperPolynomial& operator+=(const SuperPolynomial& b) { return *this = *this + b; }
    SuperPolynomial& operator-=(const SuperPolynomial& b) { return *this = *this - b; }
    SuperPolynomial& operator*=(const SuperPolynomial& b) { return *this = *this * b; }

    SuperPolynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        SuperPolynomial result = one(sig_);
        SuperPolynomial base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    /// Readable rendering, e.g. "x1_1^3 - 3*x1_1*th1_1*th2_1".
    std::string to_string() const;

    static std::string monomial_string(const AlgebraSignature& sig, const Monomial& m);

private:
    static SuperPolynomial merge(const SuperPolynomial& a, const SuperPolynomial& b, int sign) {
        require_same(a.sig_, b.sig_);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0;
        size_t j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && canonical_before(a.terms_[i].mono, b.terms_[j].mono))) {
                out.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || canonical_before(b.terms_[j].mono, a.terms_[i].mono)) {
                out.push_back(Term{b.terms_[j].mono, sign > 0 ? b.terms_[j].coeff : -b.terms_[j].coeff});
                ++j;
            } else {
                Scalar c = sign > 0 ? a.terms_[i].coeff + b.terms_[j].coeff : a.terms_[i].coeff - b.terms_[j].coeff;
                if (!c.is_zero()) out.push_back(Term{a.terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return SuperPolynomial(a.sig_, std::move(out));
    }

    static SuperPolynomial multiply(const SuperPolynomial& a, const SuperPolynomial& b);

    AlgebraSignature sig_;
    std::vector<Term> terms_;
};

namespace detail {

struct MaskBucket {
    uint64_t mask;
    std::vector<const Term*> terms;
};

inline std::vector<MaskBucket> bucket_by_mask(const std::vector<Term>& terms) {
    absl::flat_hash_map<uint64_t, size_t> index;
    std::vector<MaskBucket> buckets;
    for (const auto& t : terms) {
        auto [it, inserted] = index.try_emplace(t.mono.odd_mask(), buckets.size());
        if (inserted) buckets.push_back(MaskBucket{t.mono.odd_mask(), {}});
        buckets[it->second].terms.push_back(&t);
    }
    return buckets;
}

}  // namespace detail

inline SuperPolynomial SuperPolynomial::multiply(const SuperPolynomial& a, const SuperPolynomial& b) {
    require_same(a.sig_, b.sig_);
    if (a.is_zero() || b.is_zero()) return SuperPolynomial(a.sig_);
    TermAccumulator acc;
    // Small operands: direct double loop.
    if (a.terms_.size() * b.terms_.size() <= 4096) {
        acc.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                auto [sign, mono] = Monomial::mul(ta.mono, tb.mono);
                if (sign != 0) acc.add_signed(mono, ta.coeff * tb.coeff, sign);
            }
        }
        return from_accumulator(a.sig_, acc);
    }
    // Bucket both factors by odd part so that clashing odd supports are never visited.
    auto ba = detail::bucket_by_mask(a.terms_);
    auto bb = detail::bucket_by_mask(b.terms_);
    for (const auto& x : ba) {
        for (const auto& y : bb) {
            if (x.mask & y.mask) continue;
            int sign = (Monomial::koszul_inversions(x.mask, y.mask) & 1) ? -1 : 1;
            for (const Term* ta : x.terms) {
                for (const Term* tb : y.terms) {
                    auto [s, mono] = Monomial::mul(ta->mono, tb->mono);
                    (void)s;
                    acc.add_signed(mono, ta->coeff * tb->coeff, sign);
                }
            }
        }
    }
    return from_accumulator(a.sig_, acc);
}

inline std::string SuperPolynomial::monomial_string(const AlgebraSignature& sig, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (int s = 0; s < sig.num_even(); ++s) {
        int e = m.exponent(s);
        if (e == 0) continue;
        if (!first) os << '*';
        first = false;
        os << 'x' << sig.even_row(s) << '_' << sig.even_copy(s);
        if (e > 1) os << '^' << e;
    }
    for (int b : m.odd_bits()) {
        if (!first) os << '*';
        first = false;
        os << "th" << (sig.odd_row(b) - sig.m) << '_' << sig.odd_copy(b);
    }
    if (first) os << '1';
    return os.str();
}

inline std::string SuperPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.to_string();
        bool negative = t.coeff.is_real() && t.coeff.re().sign() < 0;
        if (negative) c = c.substr(1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit = (c == "1");
        if (t.mono.is_one()) {
            os << c;
        } else {
            if (!unit) os << c << '*';
            os << monomial_string(sig_, t.mono);
        }
    }
    return os.str();
}

}  // namespace ospinv
