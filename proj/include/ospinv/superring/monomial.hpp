#pragma once

#include "ospinv/superring/signature.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ospinv {

/// Monomial of S(N): a product of even generators with exponents times a
/// strictly increasing product of odd generators.
///
/// Layout: three 64-bit words hold 24 bytes in big-endian order. Byte 0 is
/// the total degree (even exponents plus odd count), bytes 1..23 the
/// exponents of the even slots. Comparing the words as integers therefore
/// compares (total degree, exponent vector) lexicographically. The odd part
/// is a bit set indexed by AlgebraSignature::odd_bit.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial even_generator(int slot) {
        Monomial r;
        r.set_exponent(slot, 1);
        return r;
    }

    static Monomial odd_generator(int bit) {
        Monomial r;
        r.mask_ = uint64_t(1) << bit;
        r.set_byte(0, 1);
        return r;
    }

    int exponent(int slot) const { return byte(slot + 1); }

    void set_exponent(int slot, int e) {
        if (slot < 0 || slot >= kMaxEvenVars) throw std::out_of_range("even slot out of range");
        if (e < 0 || e > 127) throw std::out_of_range("exponent out of range");
        int old = byte(slot + 1);
        int deg = degree() - old + e;
        if (deg > 127) throw std::overflow_error("monomial degree exceeds 127");
        set_byte(slot + 1, e);
        set_byte(0, deg);
    }

    uint64_t odd_mask() const { return mask_; }
    bool has_odd(int bit) const { return (mask_ >> bit) & 1U; }
    int odd_count() const { return std::popcount(mask_); }
    int degree() const { return byte(0); }
    int even_degree() const { return degree() - odd_count(); }
    int parity() const { return odd_count() & 1; }
    bool is_one() const { return words_[0] == 0 && words_[1] == 0 && words_[2] == 0 && mask_ == 0; }

    /// Odd bits in increasing order.
    std::vector<int> odd_bits() const {
        std::vector<int> out;
        for (uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    /// Position (0-based) of an odd bit inside the canonical odd list.
    int odd_position(int bit) const { return std::popcount(mask_ & ((uint64_t(1) << bit) - 1)); }

    Monomial without_odd(int bit) const {
        Monomial r = *this;
        r.mask_ &= ~(uint64_t(1) << bit);
        r.set_byte(0, degree() - 1);
        return r;
    }

    Monomial with_odd(int bit) const {
        Monomial r = *this;
        r.mask_ |= uint64_t(1) << bit;
        r.set_byte(0, degree() + 1);
        return r;
    }

    /// Number of transpositions needed to merge odd list of a followed by the
    /// odd list of b into increasing order; only meaningful when disjoint.
    static int koszul_inversions(uint64_t a, uint64_t b) {
        int inv = 0;
        for (uint64_t m = b; m != 0; m &= m - 1) {
            int j = std::countr_zero(m);
            inv += std::popcount(j == 63 ? uint64_t(0) : (a >> (j + 1)));
        }
        return inv;
    }

    /// Signed product: sign 0 when an odd generator repeats.
    static std::pair<int, Monomial> mul(const Monomial& a, const Monomial& b) {
        if (a.mask_ & b.mask_) return {0, Monomial()};
        Monomial r;
        constexpr uint64_t kHigh = 0x8080808080808080ULL;
        for (int w = 0; w < 3; ++w) {
            r.words_[w] = a.words_[w] + b.words_[w];
            if (r.words_[w] & kHigh) throw std::overflow_error("monomial exponent or degree exceeds 127");
        }
        r.mask_ = a.mask_ | b.mask_;
        int sign = (koszul_inversions(a.mask_, b.mask_) & 1) ? -1 : 1;
        return {sign, r};
    }

    /// True when every exponent of d is <= the matching exponent here (even part only).
    bool even_divisible_by(const Monomial& d) const {
        for (int s = 1; s < 24; ++s) {
            if (byte_at(d.words_, s) > byte_at(words_, s)) return false;
        }
        return true;
    }

    /// Even quotient; the caller guarantees divisibility. Odd part is kept.
    Monomial even_divided_by(const Monomial& d) const {
        Monomial r;
        r.mask_ = mask_;
        for (int w = 0; w < 3; ++w) r.words_[w] = words_[w] - d.words_[w];
        // degree byte: subtract only the even degree of d
        r.set_byte(0, degree() - d.even_degree());
        return r;
    }

    /// Canonical term order: higher total degree first, then larger even
    /// exponent vector (lexicographic in slot order), then the odd index list
    /// that is lexicographically smaller.
    friend bool canonical_before(const Monomial& a, const Monomial& b) {
        for (int w = 0; w < 3; ++w) {
            if (a.words_[w] != b.words_[w]) return a.words_[w] > b.words_[w];
        }
        if (a.mask_ == b.mask_) return false;
        uint64_t diff = a.mask_ ^ b.mask_;
        uint64_t low = diff & (~diff + 1);
        if (std::popcount(a.mask_) == std::popcount(b.mask_)) return (a.mask_ & low) != 0;
        return std::popcount(a.mask_) > std::popcount(b.mask_);
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.words_ == b.words_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    size_t hash() const {
        uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
        h ^= (words_[1] + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2));
        h ^= (words_[2] + 0x94D049BB133111EBULL + (h << 6) + (h >> 2));
        h ^= (mask_ * 0xBF58476D1CE4E5B9ULL + (h << 6) + (h >> 2));
        return size_t(h ^ (h >> 31));
    }

    template <typename H>
    friend H AbslHashValue(H h, const Monomial& m) {
        return H::combine(std::move(h), m.words_[0], m.words_[1], m.words_[2], m.mask_);
    }

private:
    static int byte_at(const std::array<uint64_t, 3>& w, int b) {
        return int((w[b / 8] >> (56 - 8 * (b % 8))) & 0xFF);
    }
    int byte(int b) const { return byte_at(words_, b); }
    void set_byte(int b, int v) {
        uint64_t& w = words_[b / 8];
        int shift = 56 - 8 * (b % 8);
        w = (w & ~(uint64_t(0xFF) << shift)) | (uint64_t(v) << shift);
    }

    std::array<uint64_t, 3> words_{0, 0, 0};
    uint64_t mask_ = 0;
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct CanonicalOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return canonical_before(a, b); }
};

}  // namespace ospinv
