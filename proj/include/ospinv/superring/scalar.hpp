#pragma once

#include "ospinv/superring/rational.hpp"

#include <string>

namespace ospinv {

/// Element of Q(i): re + i*im with exact rational parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(int64_t v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar frac(int64_t num, int64_t den) { return Scalar(Rational(num, den)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar conj() const { return Scalar(re_, -im_); }

    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ + b.re_);
        return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ - b.re_);
        return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("scalar division by zero");
        if (b.im_.is_zero()) return Scalar(a.re_ / b.re_, a.im_ / b.re_);
        Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
        Scalar num = a * b.conj();
        return Scalar(num.re_ / norm, num.im_ / norm);
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Human-readable form such as "3", "-1/2", "(1+2i)", "2i".
    std::string to_string() const {
        if (im_.is_zero()) return re_.to_short_string();
        if (re_.is_zero()) return im_.to_short_string() + "i";
        std::string im = im_.to_short_string();
        return "(" + re_.to_short_string() + (im_.sign() > 0 ? "+" : "") + im + "i)";
    }

private:
    Rational re_;
    Rational im_;
};

}  // namespace ospinv
