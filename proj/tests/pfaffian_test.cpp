#include "ospinv/pfaffian.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace ospinv {
namespace {

using testing::C;
using testing::X;

const AlgebraSignature k111(1, 1, 1);
const AlgebraSignature k112(1, 1, 2);

PolyMatrix random_even_matrix(std::mt19937& rng, const AlgebraSignature& sig, int k) {
    PolyMatrix M(sig, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) M(i, j) = testing::random_poly(rng, sig, 3, 2, 0);
    return M;
}

TEST(Quadratics, Examples) {
    auto x = X(k111, 1, 1), t1 = X(k111, 2, 1), t2 = X(k111, 3, 1);
    EXPECT_EQ(q_elem(k111, 1, 1), x * x - C(k111, 2) * t1 * t2);
    EXPECT_EQ(p_elem(k111, 1, 1), x * x);
    AlgebraSignature k102(1, 0, 2);
    EXPECT_EQ(q_elem(k102, 1, 2), X(k102, 1, 1) * X(k102, 1, 2));
    for (int s = 1; s <= 2; ++s)
        for (int t = 1; t <= 2; ++t) EXPECT_EQ(q_elem(k112, s, t), q_elem(k112, t, s));
}

TEST(Determinant, SmallExamples) {
    EXPECT_EQ(det_division_free(PolyMatrix::identity(k112, 3)), C(k112, 1));
    EXPECT_EQ(D_of(k112, 1), q_elem(k112, 1, 1));
    auto Q = Q_matrix(k112, 2);
    EXPECT_EQ(D_of(k112, 2), Q(0, 0) * Q(1, 1) - Q(0, 1) * Q(1, 0));
    EXPECT_EQ(D_of(k112, 0), C(k112, 1));
}

TEST(Determinant, ExpansionsAgree) {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 15; ++iter) {
        int k = 1 + int(rng() % 3);
        auto M = random_even_matrix(rng, k112, k);
        auto d = det_laplace(M);
        ASSERT_EQ(d, det_permutation(M));
        ASSERT_EQ(d, det_division_free(M));
    }
}

TEST(Determinant, Multiplicative) {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 10; ++iter) {
        int k = 2 + int(rng() % 2);
        auto A = random_even_matrix(rng, k112, k);
        auto B = random_even_matrix(rng, k112, k);
        ASSERT_EQ(det_division_free(A * B), det_division_free(A) * det_division_free(B));
    }
}

TEST(Determinant, AdjugateIdentity) {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 10; ++iter) {
        int k = 1 + int(rng() % 3);
        auto M = random_even_matrix(rng, k112, k);
        auto d = det_division_free(M);
        PolyMatrix dI(k112, k);
        for (int i = 0; i < k; ++i) dI(i, i) = d;
        ASSERT_EQ(M * adjugate(M), dI);
        ASSERT_EQ(adjugate(M) * M, dI);
    }
    EXPECT_EQ(adjugate(PolyMatrix::identity(k112, 2)), PolyMatrix::identity(k112, 2));
}

TEST(Determinant, RejectsOddEntries) {
    PolyMatrix M(k111, 1);
    M(0, 0) = X(k111, 2, 1);
    EXPECT_THROW(det_division_free(M), std::invalid_argument);
}

TEST(Invariants, LeadingTermOfDIsDetP) {
    for (const auto& sig : {k112, AlgebraSignature(2, 1, 3)})
        for (int k = 1; k <= sig.N; ++k) EXPECT_EQ(leading_term(D_of(sig, k)), det_division_free(P_matrix(sig, k)));
}

TEST(Invariants, DLambdaExamples) {
    EXPECT_EQ(D_lambda(k112, {0, 1}), D_of(k112, 2));
    EXPECT_EQ(D_lambda(k112, {2, 1}), D_of(k112, 1).pow(2) * D_of(k112, 2));
    EXPECT_EQ(D_lambda(k112, {}), C(k112, 1));
    EXPECT_EQ(ell_of_even_partition({4, 2}), std::vector<int>({1, 1}));
    EXPECT_EQ(ell_of_even_partition({2, 2}), std::vector<int>({0, 1}));
    EXPECT_THROW(ell_of_even_partition({3, 1}), std::invalid_argument);
    EXPECT_THROW(D_lambda(k112, {1, 1, 1}), std::out_of_range);
    auto f = D_lambda(k112, ell_of_even_partition({4, 2}));
    EXPECT_TRUE(is_osp_invariant(f));
    EXPECT_EQ(highest_weight(f), std::vector<int>({4, 2}));
}

TEST(Invariants, CoefficientC) {
    EXPECT_EQ(coeff_C(1, 1, 2, 1), Scalar(-4));
    EXPECT_EQ(coeff_C(3, 2, 5, 0), Scalar(1));
    // first factor 2(m - 2n - k + 1) vanishes at k = m + 1 when n = 0
    EXPECT_EQ(coeff_C(2, 0, 3, 2), Scalar(0));
    EXPECT_EQ(coeff_C(2, 0, 4, 2), Scalar(2 * -1 * 4 * 1));
    EXPECT_EQ(coeff_C(1, 1, 3, 1), Scalar(2 * (1 - 2 - 3 + 1)));
    EXPECT_EQ(coeff_C_lambda(1, 1, {2, 2}), Scalar(-4));
}

TEST(Omega, DeltaAndZeta) {
    AlgebraSignature k211(2, 1, 2);
    auto dl = delta(k211);
    EXPECT_EQ(dl, X(k211, 1, 1) * X(k211, 2, 2) - X(k211, 2, 1) * X(k211, 1, 2));
    EXPECT_EQ(leading_term(D_of(k211, 2)), dl * dl);

    auto zf = zeta_and_F(k111);
    EXPECT_EQ(zf.zeta, C(k111, -2) * X(k111, 2, 1) * X(k111, 3, 1));
    EXPECT_EQ(zf.K, 1);

    auto z0 = zeta_and_F(AlgebraSignature(2, 0, 2));
    EXPECT_TRUE(z0.zeta.is_zero());
    EXPECT_EQ(z0.K, 0);
    EXPECT_THROW(zeta_and_F(k112), std::invalid_argument);
}

TEST(Omega, SquareRootOfDetQ) {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
        AlgebraSignature sig(m, n, m);
        auto zf = zeta_and_F(sig);
        auto root = LocalizedElement(delta(sig), 0) * zf.F;
        EXPECT_EQ(root * root, LocalizedElement(D_of(sig, m), 0)) << m << n;
    }
}

TEST(Omega, Examples) {
    auto x = X(k111, 1, 1), t1 = X(k111, 2, 1), t2 = X(k111, 3, 1);
    EXPECT_EQ(omega(1, 1), x.pow(3) - C(k111, 3) * x * t1 * t2);
    AlgebraSignature k101(1, 0, 1);
    EXPECT_EQ(omega(1, 0), X(k101, 1, 1));
    AlgebraSignature k202(2, 0, 2);
    EXPECT_EQ(omega(2, 0), delta(k202));
    EXPECT_THROW(omega(0, 1), std::invalid_argument);
}

TEST(Omega, SquareIsPowerOfDetQ) {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {1, 2}}) {
        AlgebraSignature sig(m, n, m);
        auto om = omega(m, n);
        EXPECT_EQ(om * om, D_of(sig, m).pow(2 * n + 1)) << m << n;
        EXPECT_EQ(om.total_degree(), m * (2 * n + 1));
        EXPECT_EQ(leading_term(om), delta(sig).pow(2 * n + 1));
        EXPECT_TRUE(is_osp_invariant(om));
    }
}

TEST(Omega, Membership) {
    EXPECT_FALSE(pfaffian_membership(k111, 0));
    EXPECT_TRUE(pfaffian_membership(k111, 1));
    EXPECT_TRUE(pfaffian_membership(k111, 2));
    AlgebraSignature k121(1, 2, 1);
    EXPECT_FALSE(pfaffian_membership(k121, 1));
    EXPECT_TRUE(pfaffian_membership(k121, 2));
    EXPECT_TRUE(pfaffian_membership(AlgebraSignature(1, 0, 1), 0));
    EXPECT_THROW(pfaffian_membership(k111, -1), std::invalid_argument);
}

TEST(Omega, XiExpansionOfSquareRoot) {
    // (t^2 + nu)^{1/2} = t + nu / (2t) when nu^2 = 0
    auto zf = zeta_and_F(k111);
    auto xi = specialize_xi(LocalizedElement(delta(k111), 0) * zf.F);
    auto nu = specialize_xi(zf.zeta).at(0);
    ASSERT_EQ(xi.size(), 2u);
    EXPECT_EQ(xi.at(1), SuperPolynomial::one(nu.signature()));
    EXPECT_EQ(xi.at(-1), Scalar(Rational(1, 2)) * nu);
}

TEST(Omega, GroupAction) {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        auto om = omega(m, n);
        EXPECT_EQ(group_action(GroupElement::reflection(m, n), om), -om);
        auto g = GroupElement::identity(m, n);
        g.g1(0, 1) = Scalar(Rational(5, 3));
        ASSERT_TRUE(g.in_osp0());
        EXPECT_EQ(group_action(g, om), om);
        if (m == 2) {
            auto r = GroupElement::identity(m, n);
            r.g0(0, 0) = Scalar(Rational(3, 5));
            r.g0(0, 1) = Scalar(Rational(-4, 5));
            r.g0(1, 0) = Scalar(Rational(4, 5));
            r.g0(1, 1) = Scalar(Rational(3, 5));
            ASSERT_TRUE(r.in_osp0());
            EXPECT_EQ(group_action(r, om), om);
            EXPECT_EQ(group_action(r * GroupElement::reflection(m, n), om), -om);
        }
    }
}

TEST(Omega, GoldenFilesAreBitExact) {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}, {1, 2}}) {
        std::string path = std::string(OSPINV_GOLDEN_DIR) + "/omega_m" + std::to_string(m) + "_n" + std::to_string(n) +
                           ".json";
        std::ifstream f(path, std::ios::binary);
        ASSERT_TRUE(f) << path;
        std::stringstream ss;
        ss << f.rdbuf();
        EXPECT_EQ(ss.str(), omega_document(m, n).dump(2) + "\n") << path;
        auto j = nlohmann::json::parse(ss.str());
        EXPECT_EQ(poly_from_json(AlgebraSignature(m, n, m), j["omega"]), omega(m, n));
    }
}

TEST(Identities, CellsPass) {
    for (auto [m, n, N] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {2, 1, 2}, {2, 0, 3}, {1, 2, 2}}) {
        auto checks = detail::identity_cell(m, n, N, 2);
        ASSERT_FALSE(checks.empty());
        for (const auto& c : checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.params.dump();
    }
}

TEST(Identities, CoversEveryFamily) {
    std::set<std::string> names;
    for (const auto& c : detail::identity_cell(2, 1, 3, 2)) names.insert(c.name);
    for (const char* family : {"D-formulae-1", "D-formulae-2", "EQ", "ED", "Laplace", "truncation", "reduce"})
        EXPECT_TRUE(names.count(family)) << family;
}

TEST(Identities, ReduceExample) {
    // d^2_22 applied to D(2) at (1,1), N = 2 reduces to C(2,1) D(1), cross-checked by hand
    auto lhs = laplacian(2, 2, D_of(k112, 2));
    EXPECT_EQ(lhs, Scalar(-4) * D_of(k112, 1));
}

TEST(Osp22, RunPasses) {
    auto r = omega_osp22_integral();
    ASSERT_FALSE(r.checks.empty());
    for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.name << " " << c.detail;
    EXPECT_EQ(r.sign, 1);
    EXPECT_EQ(r.jacobian, Scalar(Rational(0), Rational(-2)));
    EXPECT_EQ(r.integral_x, Scalar(Rational(0), Rational(8)) * omega(2, 1));
}

}  // namespace
}  // namespace ospinv
