#include "ospinv/diffops.hpp"
#include "ospinv/pfaffian.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ospinv {
namespace {

using testing::C;
using testing::X;

const AlgebraSignature k111(1, 1, 1);
const AlgebraSignature k112(1, 1, 2);
const AlgebraSignature k212(2, 1, 2);

TEST(Partial, Examples) {
    auto x = X(k111, 1, 1), t1 = X(k111, 2, 1), t2 = X(k111, 3, 1);
    EXPECT_EQ(partial(1, 1, x.pow(3)), C(k111, 3) * x * x);
    EXPECT_EQ(partial(2, 1, t1 * t2), t2);
    EXPECT_EQ(partial(3, 1, t1 * t2), -t1);
    EXPECT_TRUE(partial(2, 1, t2 * x).is_zero());
    // d_{theta1} (x theta1 theta2) = x theta2
    EXPECT_EQ(partial(2, 1, x * t1 * t2), x * t2);
}

TEST(Partial, LeibnizRule) {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 60; ++iter) {
        int pf = int(rng() % 2);
        auto f = testing::random_poly(rng, k112, 4, 3, pf);
        auto g = testing::random_poly(rng, k112, 4, 3);
        if (f.is_zero()) continue;
        for (int a = 1; a <= k112.dim(); ++a) {
            for (int t = 1; t <= 2; ++t) {
                int sign = (a > k112.m && f.parity() == 1) ? -1 : 1;
                auto rhs = partial(a, t, f) * g + Scalar(sign) * (f * partial(a, t, g));
                ASSERT_EQ(partial(a, t, f * g), rhs) << "a=" << a << " t=" << t;
            }
        }
    }
}

TEST(Partial, OddDerivativesAnticommute) {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        auto f = testing::random_poly(rng, k112, 5, 4);
        auto lhs = partial(2, 1, partial(3, 2, f));
        auto rhs = partial(3, 2, partial(2, 1, f));
        ASSERT_EQ(lhs, -rhs);
    }
}

TEST(OpE, EulerOperator) {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 20; ++iter) {
        for (const auto& md : compositions(3, 2)) {
            auto basis = monomials_of_multidegree(k212, md);
            auto f = SuperPolynomial::from_monomial(k212, basis[rng() % basis.size()], Scalar(2));
            for (int t = 1; t <= 2; ++t) ASSERT_EQ(op_E(k212, t, t).apply(f), Scalar(md[t - 1]) * f);
        }
    }
}

TEST(OpE, MovesCopies) {
    auto x1 = X(k112, 1, 1), x2 = X(k112, 1, 2), th2 = X(k112, 2, 2), th1 = X(k112, 2, 1);
    EXPECT_EQ(op_E(k112, 1, 2).apply(x2), x1);
    EXPECT_EQ(op_E(k112, 1, 2).apply(th2), th1);
    EXPECT_TRUE(op_E(k112, 2, 1).apply(x2).is_zero());
    EXPECT_EQ(op_E(k112, 1, 2).apply(x2 * x2), C(k112, 2) * x1 * x2);
}

TEST(OpE, GlRelations) {
    // [E_ij, E_kl] = d_jk E_il - d_li E_kj
    AlgebraSignature sig(1, 1, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    auto lhs = super_bracket(op_E(sig, i, j), op_E(sig, k, l));
                    auto rhs = LinearOperator::identity(sig);
                    rhs = Scalar(0) * rhs;
                    if (j == k) rhs = rhs + op_E(sig, i, l);
                    if (l == i) rhs = rhs - op_E(sig, k, j);
                    ASSERT_TRUE(operators_equal(lhs, rhs, 2)) << i << j << k << l;
                }
}

TEST(OpJ, AnnihilatesQuadraticInvariants) {
    for (int s = 1; s <= 2; ++s)
        for (int t = s; t <= 2; ++t) {
            EXPECT_TRUE(is_osp_invariant(q_elem(k112, s, t)));
            EXPECT_TRUE(is_osp_invariant(q_elem(k212, s, t)));
        }
    EXPECT_TRUE(is_osp_invariant(C(k112, 7)));
    EXPECT_FALSE(is_osp_invariant(X(k112, 1, 1)));
    EXPECT_FALSE(is_osp_invariant(X(k112, 1, 1) * X(k112, 1, 2)));
}

TEST(OpJ, OmegaOneOneIsInvariant) {
    auto x = X(k111, 1, 1), t1 = X(k111, 2, 1), t2 = X(k111, 3, 1);
    auto om = x.pow(3) - C(k111, 3) * x * t1 * t2;
    EXPECT_TRUE(is_osp_invariant(om));
    EXPECT_FALSE(is_osp_invariant(x.pow(3) + C(k111, 3) * x * t1 * t2));
}

TEST(OpJ, Antisymmetry) {
    // J_ab = -(-1)^{[a][b]} J_ba
    for (int a = 1; a <= k112.dim(); ++a)
        for (int b = 1; b <= k112.dim(); ++b) {
            int sign = (a > k112.m && b > k112.m) ? 1 : -1;
            ASSERT_TRUE(operators_equal(op_J(k112, a, b), Scalar(sign) * op_J(k112, b, a), 2)) << a << b;
        }
}

TEST(Laplacian, SecondOrderExample) {
    // hand expansion: 2 from x^2, then -2 from each ordering of the odd pair
    auto q = q_elem(k111, 1, 1);
    EXPECT_EQ(laplacian(1, 1, q), C(k111, -2));
    EXPECT_EQ(laplacian(1, 1, q, LaplacianPart::Even), C(k111, 2));
}

TEST(Laplacian, CommutesWithJ) {
    for (const auto& sig : {k112, k212}) {
        for (int s = 1; s <= 2; ++s)
            for (int t = s; t <= 2; ++t) {
                auto lap = laplacian_op(sig, s, t);
                for (const auto& J : all_J(sig))
                    ASSERT_TRUE(operators_equal(lap * J, J * lap, 4)) << sig.to_string() << s << t;
            }
    }
}

TEST(Laplacian, NablaOnDTwo) {
    // (1,1), N = 2, lambda = (2,2): nabla = d^2_22 and the result is C(2,1) D(1)
    auto d2 = D_of(k112, 2);
    auto r = nabla_lambda({2, 2}, d2);
    EXPECT_EQ(r, coeff_C(1, 1, 2, 1) * D_of(k112, 1));
    EXPECT_EQ(coeff_C(1, 1, 2, 1), Scalar(-4));
    EXPECT_THROW(nabla_lambda({2, 1}, d2), std::invalid_argument);
    EXPECT_THROW(nabla_lambda({2, 2, 2}, d2), std::invalid_argument);
}

TEST(HighestWeight, Examples) {
    EXPECT_EQ(highest_weight(D_of(k112, 1)), std::vector<int>({2, 0}));
    EXPECT_EQ(highest_weight(D_of(k112, 2)), std::vector<int>({2, 2}));
    EXPECT_EQ(highest_weight(X(k112, 1, 1)), std::vector<int>({1, 0}));
    EXPECT_FALSE(highest_weight(X(k112, 1, 2)).has_value());
    EXPECT_FALSE(highest_weight(X(k112, 1, 1) + X(k112, 1, 1) * X(k112, 1, 1)).has_value());
    EXPECT_FALSE(highest_weight(SuperPolynomial(k112)).has_value());
}

TEST(SuperBracket, ParityRules) {
    auto dx = LinearOperator::deriv(k111, 1, 1);
    auto dt = LinearOperator::deriv(k111, 2, 1);
    auto mt = LinearOperator::mul(k111, 2, 1);
    EXPECT_EQ(dt.parity(), 1);
    EXPECT_EQ(dx.parity(), 0);
    // {d_theta, theta} = 1
    EXPECT_TRUE(operators_equal(super_bracket(dt, mt), LinearOperator::identity(k111), 3));
    // [d_x, d_theta] = 0
    EXPECT_TRUE(operators_equal(super_bracket(dx, dt), Scalar(0) * LinearOperator::identity(k111), 3));
}

}  // namespace
}  // namespace ospinv
