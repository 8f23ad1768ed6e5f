#pragma once

#include "ospinv/superring/basis.hpp"
#include "ospinv/superring/metric.hpp"
#include "ospinv/superring/polynomial.hpp"

#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

namespace detail {

inline int bits_below(uint64_t mask, int bit) { return std::popcount(mask & ((uint64_t(1) << bit) - 1)); }

}  // namespace detail

/// Left multiplication by the generator X^a_t.
inline SuperPolynomial multiply_generator(int a, int t, const SuperPolynomial& f) {
    const auto& sig = f.signature();
    sig.check_generator(a, t);
    std::vector<Term> out;
    out.reserve(f.size());
    if (a <= sig.m) {
        int slot = sig.even_slot(a, t);
        for (const auto& term : f.terms()) {
            Monomial mono = term.mono;
            mono.set_exponent(slot, mono.exponent(slot) + 1);
            out.push_back(Term{mono, term.coeff});
        }
    } else {
        int bit = sig.odd_bit(a, t);
        for (const auto& term : f.terms()) {
            if (term.mono.has_odd(bit)) continue;
            int sign = detail::bits_below(term.mono.odd_mask(), bit) & 1;
            out.push_back(Term{term.mono.with_odd(bit), sign ? -term.coeff : term.coeff});
        }
    }
    // multiplying every term by the same generator keeps the canonical order
    return SuperPolynomial(sig, std::move(out));
}

/// Partial derivative by X^a_t. For odd generators this is the left
/// derivative: a generator at position j (1-based) of the canonical odd list
/// contributes the sign (-1)^{j-1}.
inline SuperPolynomial partial(int a, int t, const SuperPolynomial& f) {
    const auto& sig = f.signature();
    sig.check_generator(a, t);
    std::vector<Term> out;
    out.reserve(f.size());
    if (a <= sig.m) {
        int slot = sig.even_slot(a, t);
        for (const auto& term : f.terms()) {
            int e = term.mono.exponent(slot);
            if (e == 0) continue;
            Monomial mono = term.mono;
            mono.set_exponent(slot, e - 1);
            out.push_back(Term{mono, Scalar(e) * term.coeff});
        }
    } else {
        int bit = sig.odd_bit(a, t);
        for (const auto& term : f.terms()) {
            if (!term.mono.has_odd(bit)) continue;
            int sign = term.mono.odd_position(bit) & 1;
            out.push_back(Term{term.mono.without_odd(bit), sign ? -term.coeff : term.coeff});
        }
    }
    return SuperPolynomial(sig, std::move(out));
}

/// Composable linear operator on S(N): a sum of scalar multiples of words in
/// the primitives "multiply by X^a_t" and "differentiate by X^a_t".
class LinearOperator {
public:
    enum class Kind { Mul, Deriv };

    struct Step {
        Kind kind;
        int a;
        int t;
        friend bool operator==(const Step&, const Step&) = default;
    };

    /// Steps are listed in composition order: steps.back() acts first.
    struct Word {
        Scalar coeff;
        std::vector<Step> steps;
    };

    LinearOperator() = default;
    explicit LinearOperator(AlgebraSignature sig, std::string name = "") : sig_(sig), name_(std::move(name)) {}

    static LinearOperator identity(AlgebraSignature sig) {
        LinearOperator op(sig, "1");
        op.words_.push_back(Word{Scalar(1), {}});
        return op;
    }

    static LinearOperator mul(AlgebraSignature sig, int a, int t) {
        sig.check_generator(a, t);
        LinearOperator op(sig);
        op.words_.push_back(Word{Scalar(1), {Step{Kind::Mul, a, t}}});
        return op;
    }

    static LinearOperator deriv(AlgebraSignature sig, int a, int t) {
        sig.check_generator(a, t);
        LinearOperator op(sig);
        op.words_.push_back(Word{Scalar(1), {Step{Kind::Deriv, a, t}}});
        return op;
    }

    const AlgebraSignature& signature() const { return sig_; }
    const std::vector<Word>& words() const { return words_; }
    const std::string& name() const { return name_; }
    LinearOperator& named(std::string name) {
        name_ = std::move(name);
        return *this;
    }

    /// 0 or 1 for homogeneous operators, -1 for mixed ones (zero counts as even).
    int parity() const {
        int p = -2;
        for (const auto& w : words_) {
            int q = 0;
            for (const auto& s : w.steps) q ^= sig_.parity(s.a);
            if (p == -2) {
                p = q;
            } else if (p != q) {
                return -1;
            }
        }
        return p == -2 ? 0 : p;
    }

    SuperPolynomial apply(const SuperPolynomial& f) const {
        require_same(f.signature(), sig_);
        TermAccumulator acc;
        SuperPolynomial single;
        bool one_word = words_.size() == 1;
        for (const auto& w : words_) {
            SuperPolynomial g = f;
            for (auto it = w.steps.rbegin(); it != w.steps.rend() && !g.is_zero(); ++it) {
                g = it->kind == Kind::Mul ? multiply_generator(it->a, it->t, g) : partial(it->a, it->t, g);
            }
            if (one_word) return w.coeff * g;
            for (const auto& term : g.terms()) acc.add(term.mono, w.coeff * term.coeff);
        }
        return SuperPolynomial::from_accumulator(sig_, acc);
    }

    SuperPolynomial operator()(const SuperPolynomial& f) const { return apply(f); }

    friend LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
        require_same(a.sig_, b.sig_);
        LinearOperator r(a.sig_);
        r.words_ = a.words_;
        r.words_.insert(r.words_.end(), b.words_.begin(), b.words_.end());
        r.simplify();
        return r;
    }

    friend LinearOperator operator*(const Scalar& c, const LinearOperator& a) {
        LinearOperator r(a.sig_, a.name_);
        if (c.is_zero()) return r;
        for (const auto& w : a.words_) r.words_.push_back(Word{c * w.coeff, w.steps});
        return r;
    }

    friend LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
        return a + Scalar(-1) * b;
    }

    /// Composition: (a * b)(f) = a(b(f)).
    friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
        require_same(a.sig_, b.sig_);
        LinearOperator r(a.sig_);
        for (const auto& wa : a.words_) {
            for (const auto& wb : b.words_) {
                Word w{wa.coeff * wb.coeff, wa.steps};
                w.steps.insert(w.steps.end(), wb.steps.begin(), wb.steps.end());
                r.words_.push_back(std::move(w));
            }
        }
        r.simplify();
        return r;
    }

private:
    /// Merges words with identical step sequences.
    void simplify() {
        std::vector<Word> out;
        for (auto& w : words_) {
            bool merged = false;
            for (auto& o : out) {
                if (o.steps == w.steps) {
                    o.coeff += w.coeff;
                    merged = true;
                    break;
                }
            }
            if (!merged) out.push_back(std::move(w));
        }
        std::erase_if(out, [](const Word& w) { return w.coeff.is_zero(); });
        words_ = std::move(out);
    }

    AlgebraSignature sig_;
    std::string name_;
    std::vector<Word> words_;
};

/// AB - (-1)^{[A][B]} BA for homogeneous A, B.
inline LinearOperator super_bracket(const LinearOperator& A, const LinearOperator& B) {
    int pa = A.parity();
    int pb = B.parity();
    if (pa < 0 || pb < 0) throw std::invalid_argument("super bracket needs homogeneous operators");
    Scalar sign((pa && pb) ? 1 : -1);
    return A * B + sign * (B * A);
}

/// Operator equality checked on every monomial of total degree <= max_degree.
inline bool operators_equal(const LinearOperator& A, const LinearOperator& B, int max_degree) {
    require_same(A.signature(), B.signature());
    for (const auto& mono : monomials_up_to_degree(A.signature(), max_degree)) {
        auto f = SuperPolynomial::from_monomial(A.signature(), mono);
        if (A.apply(f) != B.apply(f)) return false;
    }
    return true;
}

}  // namespace ospinv
