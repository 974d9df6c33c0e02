#include <doctest.h>

#include <cmath>

#include "hcf/ball.hpp"
#include "support.hpp"

using namespace hcft;

namespace {

QuadComplex ratio(const ConvergentPair& c) { return QuadComplex(c.p) / QuadComplex(c.q); }

// Exact |z - p/q| < 1/|q|^2, squared.
bool close_enough(const QuadComplex& z, const ConvergentPair& c) {
    QuadScalar qn = QuadScalar(c.q.norm());
    return (z - ratio(c)).norm() * qn * qn < Q(1);
}

QuadComplex random_quadratic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> u(-60, 60), v(1, 60);
    for (;;) {
        QuadComplex z(QuadScalar(mpq_class(u(rng), 121), mpq_class(v(rng), 131), 3),
                      QuadScalar(mpq_class(u(rng), 127), mpq_class(-v(rng), 137), 3));
        if (in_fundamental_domain(z) && !z.is_zero()) return z;
    }
}

}  // namespace

TEST_CASE("gauss map on the zeta orbit") {
    auto check = [](const QuadComplex& z, const GaussianInt& d, const QuadComplex& t) {
        auto [a, next] = gauss_map(z);
        CHECK(a == d);
        CHECK(next == t);
    };
    check(zeta1(), G(-2), zeta4());
    check(zeta2(), G(-2, 1), zeta4());
    check(zeta3(), G(0, 2), zeta2());
    check(zeta4(), G(1, 2), zeta2());
    QuadComplex s2(QuadScalar(mpq_class(-1), mpq_class(1), 2));
    check(s2, G(2), s2);
    CHECK_THROWS_AS(gauss_map(QuadComplex()), Error);
}

TEST_CASE("expansions of the zeta points") {
    auto e2 = expand(zeta2(), 12), e4 = expand(zeta4(), 12), e3 = expand(zeta3(), 12);
    for (size_t k = 0; k < 12; ++k) {
        CHECK(e2.digits[k] == (k % 2 == 0 ? G(-2, 1) : G(1, 2)));
        CHECK(e4.digits[k] == (k % 2 == 0 ? G(1, 2) : G(-2, 1)));
        if (k > 0) CHECK(e3.digits[k] == e2.digits[k - 1]);
    }
    CHECK(e3.digits[0] == G(0, 2));
    CHECK_FALSE(e2.terminated);
    // the orbit runs along tie lines, which no ball can decide
    try {
        expand_certified(zeta1(), 30);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Undecidable);
    }
}

TEST_CASE("gaussian rationals terminate and round trip") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> u(-500, 500), v(1, 500);
    for (int k = 0; k < 200; ++k) {
        QuadComplex z = rat(u(rng), v(rng), u(rng), v(rng));
        GaussianInt a0 = nearest_gaussian(z);
        auto e = expand(z, 1000);
        CHECK(e.terminated);
        CHECK(e.a0 == a0);
        for (const auto& d : e.digits) CHECK(is_digit(d));
        CHECK(QuadComplex(a0) + evaluate_finite(e.digits) == z);
    }
}

TEST_CASE("convergents") {
    auto cv = convergents({G(2), G(2)});
    REQUIRE(cv.size() == 3);
    CHECK(ratio(cv[2]) == rat(2, 5, 0, 1));
    CHECK(evaluate_finite({G(2), G(2)}) == rat(2, 5, 0, 1));
    Word w{G(-2), G(1, 3)};
    CHECK(evaluate_finite(w) == backward_value(w));
    CHECK(ratio(convergents(w).back()) == backward_value(w));
    std::mt19937_64 rng(9);
    for (int k = 0; k < 200; ++k) {
        Word r = random_word(rng, 1 + k % 12, 5);
        CHECK(evaluate_finite(r) == backward_value(r));
    }
}

TEST_CASE("convergent growth and approximation on regular words") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 80; ++k) {
        Word w = random_regular_word(rng, 1 + k % 25, 4);
        auto cv = convergents(w);
        for (size_t n = 1; n < cv.size(); ++n) {
            CHECK(cv[n].q.norm() > cv[n - 1].q.norm());
            CHECK(q_lower_bound_holds(cv[n].q, n));
        }
    }
    for (int k = 0; k < 60; ++k) {
        QuadComplex z = random_quadratic(rng);
        auto e = expand(z, 20);
        auto cv = convergents(e.digits);
        for (size_t n = 1; n < cv.size(); ++n) {
            CHECK(close_enough(z, cv[n]));
            Word pre(e.digits.begin(), e.digits.begin() + static_cast<long>(n));
            if (n <= 3) CHECK(cylinder_region(pre).contains(z));
        }
        CHECK(expand_certified(z, 20).digits == e.digits);
        auto [d, t] = gauss_map(z);
        auto tail = expand(t, 19);
        CHECK(tail.digits == Word(e.digits.begin() + 1, e.digits.end()));
    }
}

TEST_CASE("golden powers and prefix lengths") {
    CHECK(golden_power(0) == Q(1));
    QuadScalar phi(mpq_class(1, 2), mpq_class(1, 2), 5);
    CHECK(golden_power(1) == phi);
    CHECK(golden_power(7) == phi * phi * phi * phi * phi * phi * phi);
    CHECK(q_lower_bound_holds(G(1), 1));
    CHECK_FALSE(q_lower_bound_holds(G(1), 3));
    size_t m = lambda_prefix_length(mpq_class(1, 1000));
    // 2/psi^(m-1) <= r  <=>  phi^(m-1) >= (2/r)^2
    CHECK(golden_power(m - 1) >= Q(4000000));
    CHECK(golden_power(m - 2) < Q(4000000));
}

TEST_CASE("lambda bar") {
    DigitSeq b = DigitSeq::periodic({}, {G(-2), G(0, 2), G(2), G(0, -2)});
    ComplexBall ball = lambda_bar(b, mpq_class(1, 1000000));
    CHECK(ball.certainly_contains(zeta1()));
    CHECK(ball.rad().to_double() <= 1e-6);
    DigitSeq bad = DigitSeq::periodic({}, {G(-2), G(1, 3)});
    CHECK_THROWS_AS(lambda_bar(bad, mpq_class(1, 1000)), Error);
    // prefixes agreeing to length m give balls within 2/psi^(m-1)
    Word pre{G(-2), G(0, 2), G(2), G(0, -2), G(-2), G(0, 2)};
    pre.push_back(find_full_extension(pre));
    DigitSeq b2 = DigitSeq::periodic(pre, {G(3, 3)});
    auto x = lambda_bar(b, mpq_class(1, 10000000)), y = lambda_bar(b2, mpq_class(1, 10000000));
    CHECK((x - y).distance_upper(QuadComplex()).to_double() <= 2.0 / std::pow(std::sqrt((1 + std::sqrt(5.0)) / 2), 5));
}

TEST_CASE("mirror formula") {
    auto s = mirror({G(2), G(0, 3), G(-2)});
    CHECK(s.lhs == s.rhs);
    auto one = mirror({G(5, -2)});
    CHECK(one.lhs == QuadComplex(G(5, -2)).inverse());
    CHECK(one.lhs == one.rhs);
    std::mt19937_64 rng(13);
    size_t checked = 0;
    for (int k = 0; k < 50; ++k) {
        Word w = random_word(rng, 1 + k % 10, 4);
        try {
            auto m = mirror(w);
            CHECK(m.lhs == m.rhs);
            ++checked;
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ZeroDenominator);
        }
    }
    CHECK(checked > 40);
}
