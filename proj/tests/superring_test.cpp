#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ospinv {
namespace {

using testing::C;
using testing::X;

const AlgebraSignature k111(1, 1, 1);

TEST(Rational, ArithmeticAndNormalForm) {
    Rational a(6, -4);
    EXPECT_EQ(a.to_string(), "-3/2");
    EXPECT_EQ((a + Rational(3, 2)).to_string(), "0/1");
    EXPECT_EQ(Rational::parse("10/4").to_string(), "5/2");
    Rational big = Rational::parse("123456789012345678901234567890/7");
    EXPECT_EQ(((big + Rational(1)) - Rational(1)), big);
    EXPECT_EQ((big * big.reciprocal()).to_string(), "1/1");
}

TEST(Rational, OverflowFallsBackToBigIntegers) {
    Rational x(INT64_MAX);
    Rational y = x * x;
    EXPECT_EQ(y / x, x);
    EXPECT_EQ((y - y).to_string(), "0/1");
}

TEST(Scalar, GaussianArithmetic) {
    Scalar i = Scalar::i();
    EXPECT_EQ(i * i, Scalar(-1));
    Scalar z(Rational(1), Rational(2));
    EXPECT_EQ(z / z, Scalar(1));
    EXPECT_EQ((z + Scalar(3)) - Scalar(3), z);
    EXPECT_EQ(z.conj() * z, Scalar(5));
}

TEST(MonoMul, Examples) {
    AlgebraSignature sig(1, 1, 1);
    Monomial t1 = Monomial::odd_generator(sig.odd_bit(2, 1));
    Monomial t2 = Monomial::odd_generator(sig.odd_bit(3, 1));
    auto [s, m] = Monomial::mul(t2, t1);
    EXPECT_EQ(s, -1);
    EXPECT_EQ(m.odd_bits(), (std::vector<int>{0, 1}));

    auto [s12, m12] = Monomial::mul(t1, t2);
    EXPECT_EQ(s12, 1);
    EXPECT_EQ(Monomial::mul(m12, t1).first, 0);

    Monomial x2 = Monomial::even_generator(0);
    x2.set_exponent(0, 2);
    Monomial x3 = Monomial::even_generator(0);
    x3.set_exponent(0, 3);
    auto [se, me] = Monomial::mul(x2, x3);
    EXPECT_EQ(se, 1);
    EXPECT_EQ(me.exponent(0), 5);
}

TEST(MonoMul, ExponentOverflowThrows) {
    Monomial a;
    a.set_exponent(0, 100);
    EXPECT_THROW(Monomial::mul(a, a), std::overflow_error);
}

TEST(PolyMul, CubeOfQ11MatchesNaiveMultiplier) {
    auto x = X(k111, 1, 1);
    auto th1 = X(k111, 2, 1);
    auto th2 = X(k111, 3, 1);
    auto q = x * x - C(k111, 2) * th1 * th2;
    auto cube = q * q * q;
    auto naive = testing::naive_multiply(testing::naive_multiply(q, q), q);
    EXPECT_EQ(cube, naive);
    EXPECT_EQ(cube, x.pow(6) - C(k111, 6) * x.pow(4) * th1 * th2);
    EXPECT_EQ(cube * SuperPolynomial::one(k111), cube);
    EXPECT_TRUE((th1 * th1).is_zero());
}

TEST(PolyMul, RandomAgreesWithNaive) {
    std::mt19937 rng(11);
    for (auto sig : {AlgebraSignature(1, 1, 2), AlgebraSignature(2, 1, 2), AlgebraSignature(0, 2, 2)}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto f = testing::random_poly(rng, sig, 6, 4);
            auto g = testing::random_poly(rng, sig, 6, 4);
            ASSERT_EQ(f * g, testing::naive_multiply(f, g)) << f.to_string() << " | " << g.to_string();
        }
    }
}

TEST(PolyMul, LargeOperandsUseBucketedPath) {
    std::mt19937 rng(5);
    AlgebraSignature sig(1, 2, 2);
    SuperPolynomial f(sig);
    SuperPolynomial g(sig);
    while (f.size() < 80) f += testing::random_poly(rng, sig, 30, 4);
    while (g.size() < 80) g += testing::random_poly(rng, sig, 30, 4);
    ASSERT_GT(f.size() * g.size(), 4096u);
    EXPECT_EQ(f * g, testing::naive_multiply(f, g));
}

TEST(PolyProperties, SupercommutativityAndAssociativity) {
    std::mt19937 rng(3);
    AlgebraSignature sig(1, 1, 2);
    for (int trial = 0; trial < 60; ++trial) {
        int pf = int(rng() % 2);
        int pg = int(rng() % 2);
        auto f = testing::random_poly(rng, sig, 4, 3, pf);
        auto g = testing::random_poly(rng, sig, 4, 3, pg);
        auto h = testing::random_poly(rng, sig, 4, 3);
        if (f.parity() < 0 || g.parity() < 0) continue;
        Scalar sign((f.parity() == 1 && g.parity() == 1) ? -1 : 1);
        EXPECT_EQ(f * g, sign * (g * f));
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ((f + g) - g, f);
    }
}

TEST(PolyProperties, OddGeneratorsSquareToZero) {
    AlgebraSignature sig(2, 2, 2);
    for (int t = 1; t <= 2; ++t)
        for (int a = 3; a <= 6; ++a) EXPECT_TRUE((X(sig, a, t) * X(sig, a, t)).is_zero());
}

TEST(Multidegree, Examples) {
    AlgebraSignature sig(1, 1, 2);
    auto q12 = X(sig, 1, 1) * X(sig, 1, 2) - X(sig, 2, 1) * X(sig, 3, 2) + X(sig, 3, 1) * X(sig, 2, 2);
    EXPECT_EQ(q12.multidegree(), (std::vector<int>{1, 1}));
    auto s = X(sig, 1, 1) * X(sig, 1, 1) + X(sig, 1, 2) * X(sig, 1, 2);
    EXPECT_FALSE(s.multidegree().has_value());
    EXPECT_FALSE(SuperPolynomial(sig).multidegree().has_value());
}

TEST(Substitute, Examples) {
    auto th1 = X(k111, 2, 1);
    auto th2 = X(k111, 3, 1);
    Substitution swap(k111, k111);
    swap.set(1, 1, X(k111, 1, 1));
    swap.set(2, 1, th2);
    swap.set(3, 1, th1);
    EXPECT_EQ(swap.apply(th1 * th2), -(th1 * th2));

    auto f = X(k111, 1, 1) * X(k111, 1, 1) + C(k111, 7) * th1 * th2;
    EXPECT_EQ(Substitution::identity(k111).apply(f), f);

    Substitution shift = Substitution::identity(k111);
    auto x = X(k111, 1, 1);
    shift.set(1, 1, x + C(k111, 1));
    EXPECT_EQ(shift.apply(x * x), x * x + C(k111, 2) * x + C(k111, 1));
}

TEST(Substitute, ParityMismatchRejected) {
    Substitution s(k111, k111);
    EXPECT_THROW(s.set(1, 1, X(k111, 2, 1)), std::invalid_argument);
    EXPECT_THROW(s.set(2, 1, X(k111, 1, 1)), std::invalid_argument);
}

TEST(Substitute, HomomorphismLaw) {
    std::mt19937 rng(17);
    AlgebraSignature sig(1, 1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        Substitution s(sig, sig);
        for (int t = 1; t <= 2; ++t)
            for (int a = 1; a <= 3; ++a) {
                SuperPolynomial img = testing::random_poly(rng, sig, 3, 2, sig.parity(a));
                if (img.parity() != sig.parity(a)) img = SuperPolynomial(sig);
                s.set(a, t, img);
            }
        auto f = testing::random_poly(rng, sig, 4, 3);
        auto g = testing::random_poly(rng, sig, 4, 3);
        EXPECT_EQ(s.apply(f * g), s.apply(f) * s.apply(g));
        EXPECT_EQ(s.apply(f + g), s.apply(f) + s.apply(g));
    }
}

TEST(LeadingTerm, Examples) {
    auto x = X(k111, 1, 1);
    auto th = X(k111, 2, 1) * X(k111, 3, 1);
    EXPECT_EQ(leading_term(x), x);
    EXPECT_TRUE(leading_term(X(k111, 2, 1)).is_zero());
    EXPECT_EQ(leading_term(x.pow(3) - C(k111, 3) * x * th), x.pow(3));
    EXPECT_TRUE(leading_term(SuperPolynomial(k111)).is_zero());
}

TEST(LeadingTerm, IsHomomorphism) {
    std::mt19937 rng(23);
    AlgebraSignature sig(2, 1, 2);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = testing::random_poly(rng, sig, 5, 3);
        auto g = testing::random_poly(rng, sig, 5, 3);
        EXPECT_EQ(leading_term(f * g), leading_term(f) * leading_term(g));
    }
}

TEST(SpecializeR, RowsAboveMGoToTheta) {
    AlgebraSignature sig(1, 1, 2);
    auto out = specialize_R(X(sig, 1, 1) * X(sig, 1, 1));
    EXPECT_EQ(out, SuperPolynomial::one(AlgebraSignature(0, 1, 1)));
    auto r = specialize_R(X(sig, 2, 2) * X(sig, 3, 2));
    AlgebraSignature g(0, 1, 1);
    EXPECT_EQ(r, X(g, 1, 1) * X(g, 2, 1));
    EXPECT_TRUE(specialize_R(X(sig, 1, 2)).is_zero());
    EXPECT_THROW(specialize_R(X(AlgebraSignature(2, 1, 1), 1, 1)), std::invalid_argument);
}

TEST(ExactDiv, Examples) {
    auto x = X(k111, 1, 1);
    auto th = X(k111, 2, 1) * X(k111, 3, 1);
    auto q = exact_div(x.pow(3) - C(k111, 3) * x * th, x);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, x * x - C(k111, 3) * th);
    EXPECT_FALSE(exact_div(x * x + th, x).has_value());
    EXPECT_THROW(exact_div(x, SuperPolynomial(k111)), std::domain_error);
}

TEST(ExactDiv, RoundTripWithNilpotentDivisor) {
    std::mt19937 rng(29);
    AlgebraSignature sig(2, 1, 2);
    auto delta = X(sig, 1, 1) * X(sig, 2, 2) - X(sig, 2, 1) * X(sig, 1, 2);
    auto d = delta + X(sig, 3, 1) * X(sig, 4, 2);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = testing::random_poly(rng, sig, 6, 3);
        auto q = exact_div(f * d, d);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q * d, f * d);
        auto qd = exact_div(f * delta, delta);
        ASSERT_TRUE(qd.has_value());
        EXPECT_EQ(*qd, f);
    }
}

TEST(ExactDiv, SingleOddTermDivisor) {
    auto th1 = X(k111, 2, 1);
    auto th2 = X(k111, 3, 1);
    auto q = exact_div(th1 * th2, th1);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q * th1, th1 * th2);
    EXPECT_FALSE(exact_div(th2, th1).has_value());
}

TEST(Localized, NormalizeAndEquality) {
    AlgebraSignature m1(1, 1, 1);
    auto x = X(m1, 1, 1);
    auto e = loc_normalize(x * x, 1);
    EXPECT_EQ(e.exponent(), 0);
    EXPECT_EQ(e.numerator(), x);
    auto r = loc_normalize(x * x + X(m1, 2, 1) * X(m1, 3, 1), 1);
    EXPECT_EQ(r.exponent(), 1);
    EXPECT_EQ(loc_normalize(r).numerator(), r.numerator());
    EXPECT_EQ(loc_normalize(r).exponent(), r.exponent());
    EXPECT_TRUE(LocalizedElement(x * x * x, 2) == LocalizedElement(x, 0));
    EXPECT_FALSE(LocalizedElement(x * x, 2) == LocalizedElement(x, 0));
}

TEST(Localized, DeltaAtMTwo) {
    AlgebraSignature m2(2, 0, 2);
    EXPECT_EQ(delta_of(m2), X(m2, 1, 1) * X(m2, 2, 2) - X(m2, 2, 1) * X(m2, 1, 2));
}

TEST(SpecializeXi, DeltaMapsToT) {
    for (int m = 1; m <= 3; ++m) {
        AlgebraSignature sig(m, 1, m);
        auto image = specialize_xi(delta_of(sig));
        ASSERT_EQ(image.size(), 1u);
        EXPECT_EQ(image.begin()->first, 1);
        EXPECT_EQ(image.begin()->second, SuperPolynomial::one(AlgebraSignature(0, 1, 1)));
    }
}

TEST(GroupAction, ReflectionAndComposition) {
    auto x = X(k111, 1, 1);
    auto g = GroupElement::reflection(1, 1);
    EXPECT_EQ(group_action(g, x), -x);
    auto f = x.pow(3) - C(k111, 3) * x * X(k111, 2, 1) * X(k111, 3, 1);
    EXPECT_EQ(group_action(g, f), -f);
    EXPECT_EQ(group_action(GroupElement::identity(1, 1), f), f);
}

TEST(GroupAction, CompositionLaw) {
    std::mt19937 rng(31);
    AlgebraSignature sig(2, 1, 2);
    auto rnd = [&]() {
        ScalarMatrix a(2, 2);
        ScalarMatrix b(2, 2);
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    a(i, j) = Scalar(int(rng() % 5) - 2);
                    b(i, j) = Scalar(int(rng() % 5) - 2);
                }
        } while (a.det().is_zero() || b.det().is_zero());
        return GroupElement{a, b};
    };
    for (int trial = 0; trial < 10; ++trial) {
        auto g = rnd();
        auto h = rnd();
        auto f = testing::random_poly(rng, sig, 4, 3);
        EXPECT_EQ(group_action(g * h, f), group_action(g, group_action(h, f)));
    }
}

TEST(GroupAction, SingularRejected) {
    GroupElement g{ScalarMatrix(1, 1), ScalarMatrix::identity(2)};
    EXPECT_THROW(group_action(g, X(k111, 1, 1)), std::invalid_argument);
}

TEST(Serialize, RoundTrip) {
    std::mt19937 rng(37);
    AlgebraSignature sig(2, 1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = testing::random_poly(rng, sig, 6, 4);
        f = f * C(sig, Scalar(Rational(1, 3), Rational(-2, 5)));
        auto j = poly_to_json(f);
        EXPECT_EQ(poly_from_json(sig, j), f);
        EXPECT_EQ(poly_to_json(poly_from_json(sig, j)).dump(), j.dump());
    }
}

}  // namespace
}  // namespace ospinv
