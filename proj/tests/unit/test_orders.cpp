#include "doctest.h"
#include "oracles.hpp"

#include "pcm/orders.hpp"

using namespace pcm;

namespace {

QuadForm poly(std::size_t n, std::map<std::pair<std::size_t, std::size_t>, Rational> c) {
    return QuadForm::from_coefficients(n, c);
}

}  // namespace

TEST_CASE("built-in order") {
    EichlerOrder O = hurwitz_order();
    QuaternionAlgebra H = O.algebra();
    const Quaternion rho{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    CHECK(O.basis()[3] == rho);
    CHECK(O.level() == 1);
    CHECK(trace(rho) == 1);
    CHECK(norm(H, rho) == 1);
    CHECK(O.contains({0, 0, 0, 1}));
    CHECK_FALSE(O.contains({Rational(1, 2), 0, 0, 0}));
    CHECK(O.contains_localized({Rational(1, 25), 0, 0, Rational(3, 5)}, 5));
    CHECK_FALSE(O.contains_localized({Rational(1, 3), 0, 0, 0}, 5));
    CHECK(normalized_check(O));
    CHECK(builtin_order("disc2-maximal").basis() == O.basis());
    CHECK_THROWS_AS(builtin_order("nope"), std::invalid_argument);
    // 24 units.
    CHECK(O.norm_form().solutions(1).size() == 24);
}

TEST_CASE("order coordinates round-trip") {
    EichlerOrder O = hurwitz_order();
    Quaternion q{Rational(3, 2), Rational(-1, 2), Rational(5, 2), Rational(1, 2)};
    Coords4 c = O.coordinates(q);
    CHECK(O.element(c) == q);
    for (const Rational& x : c) CHECK(x.get_den() == 1);
}

TEST_CASE("order construction is validated") {
    QuaternionAlgebra H(-1, -1);
    using Q = Quaternion;
    CHECK_THROWS_AS(EichlerOrder(H, {Q{1, 0, 0, 0}, Q{0, Rational(1, 2), 0, 0}, Q{0, 0, 1, 0}, Q{0, 0, 0, 1}}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(EichlerOrder(H, {Q{1, 0, 0, 0}, Q{0, 1, 0, 0}, Q{0, 1, 0, 0}, Q{0, 0, 0, 1}}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(EichlerOrder(H, {Q{0, 1, 0, 0}, Q{1, 0, 0, 0}, Q{0, 0, 1, 0}, Q{0, 0, 0, 1}}, 1),
                    std::invalid_argument);
    // Lipschitz order Z<1, i, j, k> is a valid (non-maximal) order.
    EichlerOrder L(H, {Q{1, 0, 0, 0}, Q{0, 1, 0, 0}, Q{0, 0, 1, 0}, Q{0, 0, 0, 1}}, 2, "lipschitz");
    CHECK(L.norm_form().solutions(1).size() == 8);
}

TEST_CASE("normic forms of O' = Z + 2O") {
    PrimeSuborder Op = prime_suborder(hurwitz_order());
    const auto& B = Op.basis();
    CHECK(B[1] == Quaternion{0, 2, 0, 0});
    CHECK(B[2] == Quaternion{0, 0, 2, 0});
    CHECK(B[3] == Quaternion{0, 1, 1, 1});
    QuadForm N3 = ternary_normic_form(Op);
    QuadForm N4 = quaternary_normic_form(Op);
    CHECK(N3 == poly(3, {{{0, 0}, 4}, {{1, 1}, 4}, {{2, 2}, 3}, {{0, 2}, 4}, {{1, 2}, 4}}));
    CHECK(N4 == poly(4, {{{0, 0}, 1}, {{1, 1}, 4}, {{2, 2}, 4}, {{3, 3}, 3}, {{1, 3}, 4}, {{2, 3}, 4}}));
    CHECK(N3.to_string({"X", "Y", "Z"}) == "4*X^2 + 4*X*Z + 4*Y^2 + 4*Y*Z + 3*Z^2");
    // Pointwise against the norm of the element itself.
    QuaternionAlgebra H = Op.parent().algebra();
    for (long x = -3; x <= 3; ++x) {
        for (long y = -3; y <= 3; ++y) {
            for (long z = -3; z <= 3; ++z) {
                Rational want = (2 * x + z) * (2 * x + z) + (2 * y + z) * (2 * y + z) + z * z;
                CHECK(N3.evaluate(IntVector{x, y, z}) == want);
                CHECK(norm(H, Op.pure_element(x, y, z)) == want);
            }
        }
    }
}

TEST_CASE("ternary solutions match box enumeration") {
    QuadForm N3 = ternary_normic_form(prime_suborder(hurwitz_order()));
    for (long M : {3L, 4L, 8L, 11L, 12L, 19L, 20L, 27L}) {
        long R = isqrt(M).get_si() + 1;
        auto want = oracle::box_solutions(N3, M, R);
        std::sort(want.begin(), want.end());
        INFO("M = " << M);
        CHECK(N3.solutions(M) == want);
    }
    CHECK(N3.solutions(8).size() == 12);
    CHECK(N3.solutions(2).empty());
}

TEST_CASE("quaternary solutions match box enumeration") {
    QuadForm Nm = hurwitz_order().norm_form();
    for (long M : {1L, 2L, 3L, 5L, 6L}) {
        long R = 2 * isqrt(M).get_si() + 1;
        auto want = oracle::box_solutions(Nm, M, R);
        std::sort(want.begin(), want.end());
        INFO("M = " << M);
        CHECK(Nm.solutions(M) == want);
    }
}

TEST_CASE("quadratic orders") {
    QuadraticOrder K = quadratic_order(-2, 1);
    CHECK(K.field_discriminant == -8);
    CHECK(K.discriminant == -8);
    CHECK_FALSE(K.d_is_one_mod_four());
    QuadraticOrder L = quadratic_order(-3, 2);
    CHECK(L.field_discriminant == -3);
    CHECK(L.discriminant == -12);
    CHECK(L.d_is_one_mod_four());
    CHECK(quadratic_order(-1, 3).discriminant == -36);
    CHECK_THROWS_AS(quadratic_order(-4, 1), std::invalid_argument);
    CHECK_THROWS_AS(quadratic_order(-2, 0), std::invalid_argument);
}
