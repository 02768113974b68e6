#include <random>

#include "doctest.h"
#include "eisct/errors.hpp"
#include "eisct/scaled.hpp"

using namespace eisct;

namespace {

Poly poly(std::initializer_list<long long> lowfirst) {
    std::vector<Int> c;
    for (long long v : lowfirst) c.push_back(int_of(v));
    return Poly(std::move(c));
}

Poly random_poly(std::mt19937& rng, int maxdeg) {
    std::vector<Int> c;
    int deg = static_cast<int>(rng() % static_cast<unsigned>(maxdeg + 1));
    for (int i = 0; i <= deg; ++i) c.push_back(int_of(static_cast<long long>(rng() % 11) - 5));
    return Poly(std::move(c));
}

ScaledValue random_scaled(std::mt19937& rng) {
    Poly n = random_poly(rng, 4);
    Poly d;
    do {
        d = random_poly(rng, 3);
    } while (d.is_zero());
    long long num = static_cast<long long>(rng() % 7) - 3;
    long long den = 1 + static_cast<long long>(rng() % 4);
    return ScaledValue(make_rat(num, den), RatFunc(n, d));
}

}  // namespace

TEST_SUITE_BEGIN("qfield");

TEST_CASE("rational function canonical form") {
    // (q-1)/(q-1) collapses to 1 at construction, so q0 = 1 is not a pole
    RatFunc f(poly({-1, 1}), poly({-1, 1}));
    CHECK(f.is_one());
    CHECK(f.eval(Rat(1)) == 1);

    // denominator leading coefficient is positive
    RatFunc g(poly({1}), poly({-2}));
    CHECK(g.den().leading() > 0);
    CHECK(g == RatFunc(poly({-1}), poly({2})));

    // zero is 0/1
    RatFunc z(poly({0}), poly({5, 7}));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());

    // gcd reduction
    RatFunc h(poly({-1, 0, 1}), poly({1, 1}));  // (q^2-1)/(q+1) = q-1
    CHECK(h == RatFunc(poly({-1, 1})));
    CHECK(h.den().is_one());
}

TEST_CASE("canonical form is independent of the operand representation") {
    RatFunc a(poly({0, 2}), poly({2}));          // 2q/2
    RatFunc b(poly({0, -3}), poly({-3}));        // -3q/-3
    CHECK(a == b);
    RatFunc c = a * RatFunc(poly({1, 1})) / RatFunc(poly({1, 1}));
    CHECK(c == b);
}

TEST_CASE("scaled multiplication folds the exponent carry") {
    ScaledValue half = ScaledValue::q_pow(make_rat(1, 2));
    ScaledValue prod = half * half;
    CHECK(prod.exponent() == 0);
    CHECK(prod.ratfunc() == RatFunc::q_power(1));
}

TEST_CASE("the c(chi,w1) cancellation pair multiplies to one") {
    ScaledValue a(Rat(0), RatFunc(poly({1, 1, 1}), poly({0, 1})));
    ScaledValue b(Rat(0), RatFunc(poly({0, 1}), poly({1, 1, 1})));
    CHECK((a * b).is_one());
}

TEST_CASE("addition requires matching fractional exponents") {
    ScaledValue a(make_rat(1, 3), RatFunc(1));
    ScaledValue b(make_rat(2, 3), RatFunc(1));
    CHECK_THROWS_AS(a + b, IncompatibleExponent);
    ScaledValue c = a + ScaledValue(make_rat(1, 3), RatFunc(2));
    CHECK(c.ratfunc() == RatFunc(3));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), DivisionByZero);
    CHECK_THROWS_AS(RatFunc(poly({1}), poly({0})), DivisionByZero);
    CHECK_THROWS_AS(ScaledValue::one() / ScaledValue(RatFunc(0)), DivisionByZero);
}

TEST_CASE("numeric evaluation: genus-0 zeta value at q0 = 2") {
    // 1/((1-q^-2)(1-q^-1)) = q^3/((q^2-1)(q-1))
    RatFunc num = RatFunc::q_power(3);
    RatFunc den = RatFunc(poly({-1, 0, 1})) * RatFunc(poly({-1, 1}));
    NumericValue v = eval_numeric(ScaledValue(num / den), Rat(2));
    CHECK(v.exact);
    CHECK(v.value == make_rat(8, 3));
}

TEST_CASE("numeric evaluation: exact fractional powers") {
    NumericValue v = eval_numeric(ScaledValue::q_pow(make_rat(1, 2)), Rat(4));
    CHECK(v.exact);
    CHECK(v.value == 2);

    NumericValue w = eval_numeric(ScaledValue::q_pow(make_rat(1, 2)), Rat(2));
    CHECK_FALSE(w.exact);
    CHECK(w.approx == doctest::Approx(1.4142135623730951).epsilon(1e-12));
}

TEST_CASE("pole at q0 is reported") {
    RatFunc f(poly({1}), poly({-2, 1}));  // 1/(q-2)
    CHECK_THROWS_AS(eval_numeric(ScaledValue(f), Rat(2)), PoleAtQ0);
}

TEST_CASE("scaled multiplication is associative and commutative on random values") {
    std::mt19937 rng(7u);
    for (int i = 0; i < 200; ++i) {
        ScaledValue a = random_scaled(rng);
        ScaledValue b = random_scaled(rng);
        ScaledValue c = random_scaled(rng);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("numeric evaluation is multiplicative within 1e-12 relative error") {
    std::mt19937 rng(11u);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        ScaledValue a = random_scaled(rng);
        ScaledValue b = random_scaled(rng);
        Rat q0 = make_rat(2 + static_cast<long long>(rng() % 3));
        double pa, pb, pab;
        try {
            pa = eval_numeric(a, q0).as_double();
            pb = eval_numeric(b, q0).as_double();
            pab = eval_numeric(a * b, q0).as_double();
        } catch (const PoleAtQ0&) {
            continue;
        }
        if (pab == 0.0) {
            CHECK(pa * pb == 0.0);
        } else {
            CHECK(std::abs(pa * pb - pab) <= 1e-12 * std::abs(pab));
        }
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("decimal rendering marks truncation") {
    CHECK(decimal_string(make_rat(8, 3), 6) == "2.666666...");
    CHECK(decimal_string(make_rat(7, 2), 6) == "3.5");
    CHECK(decimal_string(make_rat(-7, 2), 6) == "-3.5");
}

TEST_SUITE_END();
