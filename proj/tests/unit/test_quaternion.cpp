#include "doctest.h"
#include "oracles.hpp"

#include "pcm/quaternion.hpp"

#include <random>

using namespace pcm;

namespace {

Quaternion random_quaternion(std::mt19937_64& rng, long range) {
    return {oracle::random_rational(rng, range), oracle::random_rational(rng, range), oracle::random_rational(rng, range),
            oracle::random_rational(rng, range)};
}

// Conjugation on the algebra side is the adjugate on the matrix side.
Matrix2P adjugate(const Matrix2P& m) { return {m.d, -m.b, -m.c, m.a}; }

}  // namespace

TEST_CASE("multiplication table") {
    QuaternionAlgebra A(-1, -3);
    Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(multiply(A, i, i) == Quaternion::scalar(-1));
    CHECK(multiply(A, j, j) == Quaternion::scalar(-3));
    CHECK(multiply(A, k, k) == Quaternion::scalar(-3));
    CHECK(multiply(A, i, j) == k);
    CHECK(multiply(A, j, i) == -k);
    CHECK(multiply(A, j, k) == Rational(3) * i);
    CHECK_THROWS_AS(QuaternionAlgebra(0, 1), std::invalid_argument);
}

TEST_CASE("norm, trace and conjugation") {
    std::mt19937_64 rng(3);
    for (auto [a, b] : {std::pair<long, long>{-1, -1}, {-1, -3}, {2, 5}, {-7, 3}}) {
        QuaternionAlgebra A(a, b);
        for (int n = 0; n < 50; ++n) {
            Quaternion u = random_quaternion(rng, 30), v = random_quaternion(rng, 30);
            CHECK(norm(A, multiply(A, u, v)) == norm(A, u) * norm(A, v));
            CHECK(conj(multiply(A, u, v)) == multiply(A, conj(v), conj(u)));
            CHECK(multiply(A, u, conj(u)) == Quaternion::scalar(norm(A, u)));
            CHECK(trace(u) == 2 * u.x);
            if (norm(A, u) != 0) CHECK(multiply(A, u, inverse(A, u)) == Quaternion::scalar(1));
            Quaternion w = random_quaternion(rng, 30);
            CHECK(multiply(A, multiply(A, u, v), w) == multiply(A, u, multiply(A, v, w)));
        }
    }
    QuaternionAlgebra H(-1, -1);
    CHECK(norm(H, {1, 2, 3, 4}) == 30);
    CHECK_THROWS_AS(inverse(QuaternionAlgebra(1, 1), {1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("ramification agrees with Hilbert symbol oracle") {
    for (long a = -12; a <= 12; ++a) {
        for (long b = -12; b <= 12; ++b) {
            if (a == 0 || b == 0) continue;
            Ramification r = ramification(QuaternionAlgebra(a, b));
            Integer disc = 1;
            for (long ell : {2L, 3L, 5L, 7L, 11L}) {
                if (oracle::hilbert(a, b, ell) == -1) disc *= ell;
            }
            INFO("(" << a << ", " << b << ")");
            CHECK(r.discriminant == disc);
            CHECK(r.definite == (oracle::hilbert(a, b, 0) == -1));
            CHECK(r.primes.size() % 2 == (r.definite ? 1u : 0u));
        }
    }
    Ramification h = ramification(QuaternionAlgebra(-1, -1));
    CHECK(h.discriminant == 2);
    CHECK(h.definite);
}

TEST_CASE("matrix immersion is an algebra homomorphism") {
    std::mt19937_64 rng(17);
    for (auto [a, b, p] : {std::tuple<long, long, long>{-1, -1, 5}, {-1, -1, 13}, {-1, -3, 5}, {2, -5, 7}}) {
        QuaternionAlgebra A(a, b);
        MatrixImmersion Phi = phi_p(A, p, 32);
        CHECK(padic_equal(Phi.sqrt_a() * Phi.sqrt_a(), PAdic::from_rational(a, p, 32)));
        for (int n = 0; n < 40; ++n) {
            Quaternion u = random_quaternion(rng, 40), v = random_quaternion(rng, 40);
            if (u.is_zero() || v.is_zero()) continue;
            CHECK(matrix_equal(Phi(multiply(A, u, v)), Phi(u) * Phi(v)));
            CHECK(matrix_equal(Phi(u + v), Phi(u) + Phi(v)));
            CHECK(matrix_equal(Phi(conj(u)), adjugate(Phi(u))));
            if (norm(A, u) != 0) CHECK(padic_equal(Phi(u).det(), PAdic::from_rational(norm(A, u), p, 32)));
            if (trace(u) != 0) CHECK(padic_equal(Phi(u).trace(), PAdic::from_rational(trace(u), p, 32)));
        }
    }
}

TEST_CASE("immersion preconditions") {
    QuaternionAlgebra H(-1, -1);
    CHECK_THROWS_AS(phi_p(H, 3, 10), std::invalid_argument);  // -1 is not a square mod 3
    CHECK_THROWS_AS(phi_p(H, 2, 10), std::invalid_argument);
    CHECK_THROWS_AS(phi_p(H, 9, 10), std::invalid_argument);
    auto hint = suggest_presentation(H, 3);
    REQUIRE(hint.has_value());
    CHECK(hint->generator.is_pure());
    CHECK(multiply(H, hint->generator, hint->generator) == Quaternion::scalar(hint->square));
    CHECK(legendre(hint->square.get_num() * hint->square.get_den(), 3) == 1);
}

TEST_CASE("Moebius action") {
    QuaternionAlgebra H(-1, -1);
    MatrixImmersion Phi = phi_p(H, 5, 32);
    QuadExt z = sqrt_in_quadext(-2, 5, 32);
    // i acts as z -> -z, j as z -> -1/z.
    CHECK(quadext_equal(Phi({0, 1, 0, 0}).act(z), -z));
    CHECK(quadext_equal(Phi({0, 0, 1, 0}).act(z), -z.inverse()));
    CHECK(quadext_equal(Matrix2P::identity(5, 32).act(z), z));
    Matrix2P sing = Matrix2P::from_rationals({0, 1, 0, 0}, 5, 32);
    CHECK_THROWS_AS(sing.act(QuadExt::from_rational(0, 5, 2, 32)), PrecisionError);
}
