#include <gtest/gtest.h>

#include <random>

#include "kempf/scale_value.hpp"

using namespace kempf;

namespace {

Polynomial P(std::initializer_list<int> c) {
    std::vector<Rational> v;
    for (int x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

const Polynomial m = Polynomial::variable();

} // namespace

TEST(PolyEval, Horner) {
    EXPECT_EQ(P({4, 3})(2), 10);
    EXPECT_EQ(Polynomial{}(7), 0);
    EXPECT_EQ(P({-1, 0, 1})(1), 0);
    EXPECT_EQ(P({1, 1, 1})(Rational(1, 2)), Rational(7, 4));
}

TEST(PolyCompare, EventualOrdering) {
    EXPECT_EQ(poly_compare_eventual(P({100, 2}), P({0, 3})), std::strong_ordering::less);
    EXPECT_EQ(poly_compare_eventual(P({1, 1}), P({1, 1})), std::strong_ordering::equal);
    EXPECT_EQ(poly_compare_eventual(P({0, -1000000, 1}), P({0, 0, 1})), std::strong_ordering::less);
    EXPECT_EQ(poly_compare_eventual(Polynomial{}, P({-1})), std::strong_ordering::greater);
}

TEST(PolyCompare, AgreesPointwiseBeyondRootBound) {
    std::mt19937_64 rng(7);
    auto coef = [&] { return static_cast<int>(rng() % 41) - 20; };
    for (int trial = 0; trial < 500; ++trial) {
        const Polynomial p = P({coef(), coef(), coef(), coef()});
        const Polynomial q = P({coef(), coef(), coef()});
        const auto c = poly_compare_eventual(p, q);
        const Polynomial d = p - q;
        const Rational bound = d.root_bound();
        for (int k = 0; k < 5; ++k) {
            const Rational at = bound + k;
            EXPECT_EQ(to_ordering(sgn(Rational(p(at) - q(at)))), c);
        }
    }
}

TEST(ReducedCompare, Examples) {
    EXPECT_EQ(reduced_compare(P({3, 1}), 1, P({4, 3}), 3), std::strong_ordering::greater);
    EXPECT_EQ(reduced_compare(P({2, 2}), 2, P({1, 1}), 1), std::strong_ordering::equal);
    EXPECT_EQ(reduced_compare(m, 1, P({-2, 2}), 2), std::strong_ordering::greater);
    EXPECT_THROW(reduced_compare(m, 0, m, 1), Error);
}

TEST(ReducedCompare, Reflexive) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Polynomial p = P({static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 5) + 1});
        const int r = static_cast<int>(rng() % 5) + 1;
        EXPECT_EQ(reduced_compare(p, r, p, r), std::strong_ordering::equal);
    }
}

TEST(PolyArith, DivmodAndGcd) {
    const Polynomial a = P({-1, 0, 1}); // (m-1)(m+1)
    const Polynomial b = P({1, 1});
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q, P({-1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(a, P({-2, 2})), P({-1, 1}));
    EXPECT_EQ(gcd(P({1, 1}), P({2, 1})), Polynomial(1));
}

TEST(PolyFormat, ToString) {
    EXPECT_EQ(to_string(P({4, 3})), "3m+4");
    EXPECT_EQ(to_string(P({-2, 0, -1})), "-m^2-2");
    EXPECT_EQ(to_string(Polynomial(std::vector<Rational>{Rational(1, 2), Rational(-1, 3)})), "-(1/3)m+1/2");
    EXPECT_EQ(to_string(Polynomial{}), "0");
}

TEST(RationalParse, Forms) {
    EXPECT_EQ(parse_rational("3"), 3);
    EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("1.5"), Error);
    EXPECT_THROW(parse_rational("1/-2"), Error);
    EXPECT_THROW(parse_rational(""), Error);
}

TEST(RationalFunctionTest, NormalizesAndOrders) {
    const RationalFunction x = RationalFunction::variable();
    const RationalFunction f(P({0, 0, 1}), P({0, 1}));
    EXPECT_EQ(f, x);
    EXPECT_EQ(RationalFunction(P({2, 2}), P({4, 4})), RationalFunction(Rational(1, 2)));
    EXPECT_TRUE(RationalFunction(1) / x < RationalFunction(Rational(1, 1000)));
    EXPECT_TRUE(x - RationalFunction(1000000) > RationalFunction(0));
    EXPECT_EQ((x + 1) * (x - 1) / (x - 1), x + 1);
    EXPECT_EQ(RationalFunction(P({1}), P({2, 2}))(3), Rational(1, 8));
    EXPECT_THROW(RationalFunction(P({1}), P({-1, 1}))(1), Error);
}

TEST(ScaleCompare, Examples) {
    const auto num = ValueMode::numeric(0);
    EXPECT_EQ(scale_compare(ScaleValue::from_square(Sign::positive, Rational(4), num),
                            ScaleValue::from_square(Sign::positive, Rational(3, 2), num)),
              std::strong_ordering::greater);
    EXPECT_EQ(scale_compare(ScaleValue::from_square(Sign::negative, Rational(100), num),
                            ScaleValue::from_square(Sign::positive, Rational(1, 100), num)),
              std::strong_ordering::less);
    const auto asym = ValueMode::asymptotic();
    EXPECT_EQ(scale_compare(ScaleValue(Sign::positive, P({0, 0, 1}), P({0, 1}), asym),
                            ScaleValue(Sign::positive, P({0, 1}), P({1}), asym)),
              std::strong_ordering::equal);
    EXPECT_THROW(scale_compare(ScaleValue::zero(num), ScaleValue::zero(asym)), Error);
}

TEST(ScaleCompare, NegativeMagnitudesReverse) {
    const auto num = ValueMode::numeric(3);
    EXPECT_EQ(scale_compare(ScaleValue::from_square(Sign::negative, Rational(4), num),
                            ScaleValue::from_square(Sign::negative, Rational(1), num)),
              std::strong_ordering::less);
    EXPECT_EQ(ScaleValue::from_square(Sign::positive, Rational(0), num).sign(), Sign::zero);
}

TEST(ScaleCompare, TransitiveAndAntisymmetric) {
    std::mt19937_64 rng(11);
    const auto asym = ValueMode::asymptotic();
    auto draw = [&] {
        const auto s = static_cast<Sign>(static_cast<int>(rng() % 3) - 1);
        const Polynomial num = P({static_cast<int>(rng() % 5), static_cast<int>(rng() % 3)});
        const Polynomial den = P({static_cast<int>(rng() % 4) + 1, static_cast<int>(rng() % 2)});
        return ScaleValue(s, num, den, asym);
    };
    for (int i = 0; i < 2000; ++i) {
        const ScaleValue a = draw(), b = draw(), c = draw();
        EXPECT_EQ(scale_compare(a, b), 0 <=> scale_compare(b, a));
        if (scale_compare(a, b) <= 0 && scale_compare(b, c) <= 0) {
            EXPECT_TRUE(scale_compare(a, c) <= 0);
        }
    }
}
