#pragma once

#include "ospinv/superring/rational.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospinv {

/// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must not increase");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    /// omega_r = (1, ..., 1) with r ones.
    static Partition omega(int r) { return Partition(std::vector<int>(size_t(std::max(r, 0)), 1)); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return int(parts_.size()); }
    /// 1-based part, zero beyond the length.
    int operator[](int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool is_even() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
    }

    /// lambda_{m+1} <= 2n.
    bool in_hook(int m, int n) const { return (*this)[m + 1] <= 2 * n; }

    /// lambda - omega_m even, lambda_{m+1} <= 2n < lambda_m.
    bool pseudo_admissible(int m, int n) const {
        if (m < 1 || length() < m) return false;
        for (int i = 1; i <= length(); ++i) {
            int rest = (*this)[i] - (i <= m ? 1 : 0);
            if (rest % 2 != 0) return false;
        }
        return (*this)[m + 1] <= 2 * n && (*this)[m] >= 2 * n + 1;
    }

    Partition transpose() const {
        std::vector<int> t(parts_.empty() ? 0 : size_t(parts_.front()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++t[j];
        return Partition(std::move(t));
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

enum class PartitionFilter { All, Hook, EvenHook, PseudoAdmissible };

/// Partitions of d with at most max_len parts passing the filter, in increasing
/// lexicographic order.
inline std::vector<Partition> enumerate_partitions(int d, int max_len, PartitionFilter filter = PartitionFilter::All,
                                                   int m = 0, int n = 0) {
    std::vector<Partition> out;
    if (d < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int bound) {
        if (left == 0) {
            Partition p(cur);
            bool keep = true;
            switch (filter) {
                case PartitionFilter::All:
                    break;
                case PartitionFilter::Hook:
                    keep = p.in_hook(m, n);
                    break;
                case PartitionFilter::EvenHook:
                    keep = p.is_even() && p.in_hook(m, n);
                    break;
                case PartitionFilter::PseudoAdmissible:
                    keep = p.pseudo_admissible(m, n);
                    break;
            }
            if (keep) out.push_back(std::move(p));
            return;
        }
        if (int(cur.size()) == max_len) return;
        for (int v = std::min(left, bound); v >= 1; --v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(d, d);
    std::sort(out.begin(), out.end());
    return out;
}

/// Weyl dimension of the gl_N module with highest weight lambda.
inline long long dim_glN(const Partition& lambda, int N) {
    if (lambda.length() > N) throw std::invalid_argument("partition " + lambda.to_string() + " longer than N");
    Rational r(1);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) r *= Rational(lambda[i] - lambda[j] + j - i, j - i);
    return r.small_num();
}

/// Number of standard Young tableaux of shape mu (hook length formula).
inline long long f_mu(const Partition& mu) {
    auto t = mu.transpose();
    Rational r(1);
    int k = 0;
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = 1; j <= mu[i]; ++j) {
            ++k;
            int hook = (mu[i] - j) + (t[j] - i) + 1;
            r *= Rational(k, hook);
        }
    }
    return r.small_num();
}

/// Number of (m|2n)-semistandard tableaux of shape lambda: entries 1..m are
/// even (rows weak, columns strict), entries m+1..m+2n odd (rows strict,
/// columns weak), with even < odd.
inline long long dim_glV_hook(const Partition& lambda, int m, int n) {
    int alphabet = m + 2 * n;
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i]; ++j) cells.emplace_back(i, j);
    std::vector<std::vector<int>> tab(size_t(lambda.length()) + 1, std::vector<int>(size_t(lambda[1]) + 2, 0));
    long long count = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 1; v <= alphabet; ++v) {
            bool odd = v > m;
            if (j > 1) {
                int left = tab[i][j - 1];
                if (odd ? left >= v : left > v) continue;
            }
            if (i > 1) {
                int up = tab[i - 1][j];
                if (odd ? up > v : up >= v) continue;
            }
            tab[i][j] = v;
            rec(idx + 1);
        }
        tab[i][j] = 0;
    };
    rec(0);
    return count;
}

/// dim Gamma(N) = prod_{j=m+1}^{N} prod_{i=1}^{m} (2n+1+j-i)/(j-i); the
/// product is checked to be an integer.
inline long long dim_gamma(int N, int m, int n) {
    if (N < m) throw std::invalid_argument("dim_gamma needs N >= m");
    Rational r(1);
    for (int j = m + 1; j <= N; ++j)
        for (int i = 1; i <= m; ++i) r *= Rational(2 * n + 1 + j - i, j - i);
    if (r.small_den() != 1) throw std::logic_error("dim_gamma product is not an integer");
    return r.small_num();
}

}  // namespace ospinv
