#pragma once

#include "ospinv/superring/scalar_matrix.hpp"

namespace ospinv {

/// The even supersymmetric form on V = C^{m|2n}:
/// kappa = diag(I_m, eta), eta = [[0, I_n], [-I_n, 0]].
struct MetricData {
    int m = 0;
    int n = 0;
    ScalarMatrix kappa;
    ScalarMatrix kappa_inv;
    ScalarMatrix eta;

    static MetricData standard(int m, int n) {
        MetricData md;
        md.m = m;
        md.n = n;
        md.eta = ScalarMatrix(2 * n, 2 * n);
        for (int i = 0; i < n; ++i) {
            md.eta(i, n + i) = Scalar(1);
            md.eta(n + i, i) = Scalar(-1);
        }
        md.kappa = ScalarMatrix::block_diag(ScalarMatrix::identity(m), md.eta);
        // eta^{-1} = -eta
        md.kappa_inv = ScalarMatrix::block_diag(ScalarMatrix::identity(m), Scalar(-1) * md.eta);
        return md;
    }

    int dim() const { return m + 2 * n; }

    /// kappa_{ab} with 1-based indices.
    const Scalar& form(int a, int b) const { return kappa(a - 1, b - 1); }
    /// (kappa^{-1})_{ab} with 1-based indices.
    const Scalar& form_inv(int a, int b) const { return kappa_inv(a - 1, b - 1); }
};

}  // namespace ospinv
