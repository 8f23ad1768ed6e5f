#pragma once

#include "ospinv/superring/polynomial.hpp"

#include <absl/container/flat_hash_map.h>

#include <map>
#include <stdexcept>
#include <vector>

namespace ospinv {

/// Sparse exact vector: column -> nonzero entry.
using SparseVector = std::map<int, Scalar>;

inline void axpy(SparseVector& y, const Scalar& c, const SparseVector& x) {
    for (const auto& [j, v] : x) {
        auto it = y.find(j);
        if (it == y.end()) {
            y.emplace(j, c * v);
        } else {
            it->second += c * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

/// rows x cols matrix over Q(i), stored as sparse rows.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols) : cols_(cols), rows_(size_t(rows)) {}

    int rows() const { return int(rows_.size()); }
    int cols() const { return cols_; }

    void set(int i, int j, const Scalar& v) {
        if (j < 0 || j >= cols_ || i < 0 || i >= rows()) throw std::out_of_range("matrix index out of range");
        if (v.is_zero()) {
            rows_[i].erase(j);
        } else {
            rows_[i][j] = v;
        }
    }
    void add(int i, int j, const Scalar& v) {
        SparseVector one{{j, v}};
        axpy(rows_[i], Scalar(1), one);
    }
    Scalar get(int i, int j) const {
        auto it = rows_[i].find(j);
        return it == rows_[i].end() ? Scalar() : it->second;
    }
    int append_row(SparseVector row = {}) {
        rows_.push_back(std::move(row));
        return rows() - 1;
    }
    const SparseVector& row(int i) const { return rows_[i]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        std::vector<Scalar> out(rows_.size());
        for (size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [j, c] : rows_[i]) out[i] += c * v[j];
        return out;
    }

private:
    int cols_;
    std::vector<SparseVector> rows_;
};

/// Incrementally maintained row echelon form. Each stored row has a pivot
/// (its smallest column) normalized to 1 and is reduced against all rows
/// inserted before it.
class RowSpace {
public:
    /// Reduces v against the stored rows.
    SparseVector reduce(SparseVector v) const {
        for (const auto& r : rows_) {
            auto it = v.find(r.begin()->first);
            if (it == v.end()) continue;
            Scalar c = -it->second;
            axpy(v, c, r);
        }
        return v;
    }

    /// Inserts v; returns true if it enlarged the span.
    bool add(const SparseVector& v) {
        auto r = reduce(v);
        if (r.empty()) return false;
        Scalar inv = Scalar(1) / r.begin()->second;
        for (auto& [j, c] : r) c *= inv;
        rows_.push_back(std::move(r));
        return true;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    int rank() const { return int(rows_.size()); }
    const std::vector<SparseVector>& rows() const { return rows_; }

    /// Reduced row echelon rows, sorted by pivot.
    std::vector<SparseVector> rref() const {
        std::vector<SparseVector> r = rows_;
        std::sort(r.begin(), r.end(), [](const SparseVector& a, const SparseVector& b) {
            return a.begin()->first < b.begin()->first;
        });
        for (size_t i = r.size(); i-- > 0;) {
            int p = r[i].begin()->first;
            for (size_t k = 0; k < i; ++k) {
                auto it = r[k].find(p);
                if (it == r[k].end()) continue;
                Scalar c = -it->second;
                axpy(r[k], c, r[i]);
            }
        }
        return r;
    }

private:
    std::vector<SparseVector> rows_;
};

/// Basis of the right kernel of M, each vector certified by M v = 0.
inline std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& M) {
    RowSpace rs;
    for (int i = 0; i < M.rows(); ++i) rs.add(M.row(i));
    auto rows = rs.rref();
    std::vector<bool> pivot(size_t(M.cols()), false);
    for (const auto& r : rows) pivot[r.begin()->first] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < M.cols(); ++f) {
        if (pivot[f]) continue;
        std::vector<Scalar> v(size_t(M.cols()));
        v[f] = Scalar(1);
        for (const auto& r : rows) {
            auto it = r.find(f);
            if (it != r.end()) v[r.begin()->first] = -it->second;
        }
        for (const auto& x : M.apply(v))
            if (!x.is_zero()) throw std::logic_error("kernel vector failed certification");
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Assigns consecutive column indices to monomials on first sight.
class MonomialIndex {
public:
    MonomialIndex() = default;
    explicit MonomialIndex(const std::vector<Monomial>& basis) {
        for (const auto& m : basis) index(m);
    }

    int index(const Monomial& m) {
        auto [it, inserted] = map_.try_emplace(m, int(monos_.size()));
        if (inserted) monos_.push_back(m);
        return it->second;
    }
    /// -1 when unknown.
    int find(const Monomial& m) const {
        auto it = map_.find(m);
        return it == map_.end() ? -1 : it->second;
    }
    const Monomial& monomial(int i) const { return monos_[i]; }
    int size() const { return int(monos_.size()); }

    SparseVector vectorize(const SuperPolynomial& f) {
        SparseVector v;
        for (const auto& t : f.terms()) v.emplace(index(t.mono), t.coeff);
        return v;
    }

    SuperPolynomial polynomial(const AlgebraSignature& sig, const SparseVector& v) const {
        TermAccumulator acc;
        for (const auto& [j, c] : v) acc.add(monos_[j], c);
        return SuperPolynomial::from_accumulator(sig, acc);
    }

    SuperPolynomial polynomial(const AlgebraSignature& sig, const std::vector<Scalar>& v) const {
        TermAccumulator acc;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) acc.add(monos_[j], v[j]);
        return SuperPolynomial::from_accumulator(sig, acc);
    }

private:
    absl::flat_hash_map<Monomial, int> map_;
    std::vector<Monomial> monos_;
};

}  // namespace ospinv
