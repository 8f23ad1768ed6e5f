#pragma once

#include <stdexcept>
#include <string>

namespace ospinv {

/// Limits of the packed monomial representation.
inline constexpr int kMaxEvenVars = 23;
inline constexpr int kMaxOddVars = 64;

/// Shape of S(N) for V = C^{m|2n}: generators X^a_t with 1 <= a <= m+2n and
/// 1 <= t <= N; rows a <= m are even (x^a_t), rows a > m odd (theta^{a-m}_t).
struct AlgebraSignature {
    int m = 0;
    int n = 0;
    int N = 1;

    AlgebraSignature() = default;
    AlgebraSignature(int m_, int n_, int N_) : m(m_), n(n_), N(N_) { validate(); }

    void validate() const {
        if (m < 0 || n < 0 || N < 1) {
            throw std::invalid_argument("signature requires m >= 0, n >= 0, N >= 1 (got " + to_string() + ")");
        }
        if (m * N > kMaxEvenVars) {
            throw std::invalid_argument("too many even generators for " + to_string());
        }
        if (2 * n * N > kMaxOddVars) {
            throw std::invalid_argument("too many odd generators for " + to_string());
        }
    }

    int dim() const { return m + 2 * n; }
    int num_even() const { return m * N; }
    int num_odd() const { return 2 * n * N; }
    int num_generators() const { return dim() * N; }

    /// [a] = 0 iff a <= m.
    int parity(int a) const { return a <= m ? 0 : 1; }

    void check_generator(int a, int t) const {
        if (a < 1 || a > dim() || t < 1 || t > N) {
            throw std::out_of_range("generator (" + std::to_string(a) + "," + std::to_string(t) +
                                    ") out of range for " + to_string());
        }
    }

    void check_copy(int t) const {
        if (t < 1 || t > N) {
            throw std::out_of_range("copy index " + std::to_string(t) + " out of range for " + to_string());
        }
    }

    /// Packed slot of the even generator x^i_t.
    int even_slot(int i, int t) const { return (t - 1) * m + (i - 1); }
    /// Bit of the odd generator X^a_t (a > m); increasing in g(a,t) = (t-1)(m+2n)+a.
    int odd_bit(int a, int t) const { return (t - 1) * 2 * n + (a - m - 1); }

    int even_row(int slot) const { return slot % m + 1; }
    int even_copy(int slot) const { return slot / m + 1; }
    int odd_row(int bit) const { return bit % (2 * n) + m + 1; }
    int odd_copy(int bit) const { return bit / (2 * n) + 1; }

    std::string to_string() const {
        return "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",N=" + std::to_string(N) + ")";
    }

    friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

inline void require_same(const AlgebraSignature& a, const AlgebraSignature& b) {
    if (!(a == b)) throw std::invalid_argument("signature mismatch: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace ospinv
