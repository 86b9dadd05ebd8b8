#include "doctest.h"
#include "oracles.hpp"

#include "pcm/padic.hpp"

#include <random>

using namespace pcm;

TEST_CASE("p-adic construction and valuation") {
    PAdic x = PAdic::from_rational(Rational(50, 3), 5, 10);
    CHECK(x.valuation() == 2);
    CHECK(x.relative_precision() == 10);
    CHECK(x.absolute_precision() == 12);
    CHECK(PAdic::from_rational(Rational(1, 5), 5, 4).valuation() == -1);
    CHECK(PAdic::from_rational(0, 5, 4).is_zero());
    CHECK_THROWS_AS(PAdic::from_rational(1, 5, 0), std::invalid_argument);
}

TEST_CASE("sqrt(-1) in Q_5 matches brute-force search") {
    PAdic i3 = hensel_sqrt(PAdic::from_rational(-1, 5, 3));
    CHECK(i3.unit_digits() == std::vector<Integer>{2, 1, 2});
    CHECK(i3.truncated_value() == 57);
    CHECK(i3.render() == "2 + 1·5 + 2·5² + O(5³)");
    for (int k = 1; k <= 8; ++k) {
        PAdic r = hensel_sqrt(PAdic::from_rational(-1, 5, k));
        CHECK(r.truncated_value() == oracle::sqrt_minus_one_by_search(5, k));
    }
    // The alternative third digit does not square to -1 mod 125.
    CHECK((32 * 32 + 1) % 125 != 0);
    CHECK((57 * 57 + 1) % 125 == 0);
}

TEST_CASE("hensel_sqrt squares back") {
    for (long p : {3L, 5L, 7L, 13L}) {
        for (long a = -40; a <= 40; ++a) {
            if (a == 0) continue;
            PAdic x = PAdic::from_rational(a, p, 20);
            if (valuation(Integer(a), p) % 2 != 0) {
                CHECK_FALSE(is_square(x));
                continue;
            }
            Integer u = a;
            while (u % p == 0) u /= p;
            CHECK(is_square(x) == (oracle::legendre_by_squares(u.get_si(), p) == 1));
            if (!is_square(x)) continue;
            PAdic r = hensel_sqrt(x);
            CHECK(padic_equal(r * r, x));
        }
    }
    CHECK_THROWS_AS(hensel_sqrt(PAdic::from_rational(2, 5, 5)), std::invalid_argument);
}

TEST_CASE("field operations agree with rational arithmetic") {
    std::mt19937_64 rng(5);
    for (long p : {5L, 13L}) {
        for (int n = 0; n < 200; ++n) {
            Rational a = oracle::random_rational(rng, 1000, true);
            Rational b = oracle::random_rational(rng, 1000, true);
            auto P = [&](const Rational& q) { return PAdic::from_rational(q, p, 32); };
            if (a + b != 0) CHECK(padic_equal(P(a) + P(b), P(a + b)));
            if (a - b != 0) CHECK(padic_equal(P(a) - P(b), P(a - b)));
            CHECK(padic_equal(P(a) * P(b), P(a * b)));
            CHECK(padic_equal(P(a) / P(b), P(a / b)));
            CHECK(padic_equal(P(a).times(Integer(p * 3)), P(a * p * 3)));
        }
    }
}

TEST_CASE("precision is tracked, never invented") {
    PAdic a = PAdic::from_rational(1 + 125, 5, 3);
    PAdic b = PAdic::from_rational(1, 5, 3);
    PAdic diff = a - b;
    CHECK(diff.is_zero());
    CHECK(diff.absolute_precision() == 3);
    CHECK_THROWS_AS(diff.inverse(), PrecisionError);
    PAdic c = PAdic::from_rational(125, 5, 3);
    CHECK_THROWS_AS(padic_equal(diff, c), PrecisionError);
    // Cancellation reduces relative precision.
    PAdic x = PAdic::from_rational(1 + 5, 5, 6) - PAdic::from_rational(1, 5, 6);
    CHECK(x.valuation() == 1);
    CHECK(x.relative_precision() == 5);
}

TEST_CASE("unramified quadratic extension") {
    const Integer p = 5;
    Integer eps = canonical_eps(p);
    CHECK(eps == 2);
    QuadExt s = sqrt_in_quadext(-2, p, 32);
    CHECK(quadext_equal(s * s, QuadExt::from_rational(-2, p, eps, 32)));
    CHECK_FALSE(s.in_base());
    CHECK_THROWS_AS(sqrt_in_quadext(10, p, 32), std::invalid_argument);
    CHECK_THROWS_AS(sqrt_in_quadext(-1, p, 32), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (int n = 0; n < 100; ++n) {
        auto R = [&] { return PAdic::from_rational(oracle::random_rational(rng, 200, true), p, 32); };
        QuadExt z(R(), R(), eps), w(R(), R(), eps);
        CHECK(quadext_equal(z * z.inverse(), QuadExt::from_rational(1, p, eps, 32)));
        CHECK(padic_equal((z * w).norm(), z.norm() * w.norm()));
        CHECK(quadext_equal(galois_conj(z * w), galois_conj(z) * galois_conj(w)));
        CHECK(padic_equal(z.norm(), (z * galois_conj(z)).x()));
    }
}
