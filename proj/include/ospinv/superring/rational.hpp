#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ospinv {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

inline u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline bool fits_i64(i128 v) {
    return v >= i128(INT64_MIN) + 1 && v <= i128(INT64_MAX);
}

inline mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    u128 u = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace detail

/// Exact rational number. Values whose numerator and denominator fit in a
/// machine word are kept inline; anything larger is promoted to GMP.
class Rational {
public:
    Rational() = default;
    Rational(int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int64_t num, int64_t den) { assign(num, den); }
    explicit Rational(const mpq_class& q) { assign_big(q); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        mpq_class q;
        if (q.set_str(std::string(text), 10) != 0) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        q.canonicalize();
        return Rational(q);
    }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_small() const { return !big_; }
    int sign() const {
        if (big_) return sgn(*big_);
        return (num_ > 0) - (num_ < 0);
    }

    mpq_class to_mpq() const {
        if (big_) return *big_;
        return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    }

    /// Always "p/q", including a unit denominator.
    std::string to_string() const {
        if (big_) return big_->get_num().get_str() + "/" + big_->get_den().get_str();
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Shortest form: "p" when the denominator is one.
    std::string to_short_string() const {
        if (big_) return big_->get_str();
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator-(const Rational& a) {
        if (a.big_) return Rational(mpq_class(-*a.big_));
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
        if (a.den_ == 1 && b.den_ == 1) return from_i128(detail::i128(a.num_) + b.num_, 1);
        detail::i128 n = detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_;
        detail::i128 d = detail::i128(a.den_) * b.den_;
        return from_i128(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        if (a.den_ == 1 && b.den_ == 1) return from_i128(detail::i128(a.num_) * b.num_, 1);
        int64_t g1 = gcd64(a.num_, b.den_);
        int64_t g2 = gcd64(b.num_, a.den_);
        detail::i128 n = detail::i128(a.num_ / g1) * (b.num_ / g2);
        detail::i128 d = detail::i128(a.den_ / g2) * (b.den_ / g1);
        return from_reduced_i128(n, d);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("rational division by zero");
        return a * b.reciprocal();
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        if (big_) return Rational(mpq_class(1 / *big_));
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) {
            if (!a.big_ || !b.big_) return false;  // canonical: small values never stored big
            return *a.big_ == *b.big_;
        }
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
        return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
    }

    /// Numerator and denominator when small; used for hashing and fast paths.
    int64_t small_num() const { return num_; }
    int64_t small_den() const { return den_; }

private:
    static int64_t gcd64(int64_t a, int64_t b) {
        uint64_t x = a < 0 ? uint64_t(-a) : uint64_t(a);
        uint64_t y = b < 0 ? uint64_t(-b) : uint64_t(b);
        while (y != 0) {
            uint64_t r = x % y;
            x = y;
            y = r;
        }
        return x == 0 ? 1 : int64_t(x);
    }

    void assign(int64_t num, int64_t den) {
        if (den == 0) throw std::domain_error("zero denominator");
        *this = from_i128(num, den);
    }

    void assign_big(const mpq_class& q) {
        if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
            q.get_num() != LONG_MIN) {
            num_ = q.get_num().get_si();
            den_ = q.get_den().get_si();
            big_.reset();
        } else {
            num_ = 0;
            den_ = 1;
            big_ = std::make_unique<mpq_class>(q);
        }
    }

    static Rational from_i128(detail::i128 n, detail::i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return Rational();
        detail::u128 g = detail::gcd128(detail::abs128(n), detail::u128(d));
        if (g > 1) {
            n /= detail::i128(g);
            d /= detail::i128(g);
        }
        return from_reduced_i128(n, d);
    }

    static Rational from_reduced_i128(detail::i128 n, detail::i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Rational r;
        if (detail::fits_i64(n) && detail::fits_i64(d)) {
            r.num_ = int64_t(n);
            r.den_ = int64_t(d);
        } else {
            mpq_class q(detail::to_mpz(n), detail::to_mpz(d));
            q.canonicalize();
            r.assign_big(q);
        }
        return r;
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace ospinv
