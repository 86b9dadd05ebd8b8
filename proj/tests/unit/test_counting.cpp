#include "doctest.h"
#include "oracles.hpp"

#include "pcm/counting.hpp"
#include "pcm/orders.hpp"

using namespace pcm;

TEST_CASE("class numbers against reduction and the analytic formula") {
    for (long disc = -3; disc >= -200; --disc) {
        long r = ((disc % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        INFO("disc = " << disc);
        long h = class_number(disc).get_si();
        CHECK(h == oracle::class_number_by_reduction(disc));
        CHECK(h == oracle::class_number_analytic(disc));
    }
    CHECK(class_number(-8) == 1);
    CHECK(class_number(-20) == 2);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-56) == 4);
    CHECK_THROWS_AS(class_number(-6), std::invalid_argument);
    CHECK_THROWS_AS(class_number(5), std::invalid_argument);
}

TEST_CASE("local factors") {
    // D_K = -8: 5 inert, 3 split, 2 ramified.
    CHECK(local_factor(5, FactorRole::DividesDp, -8) == 2);
    CHECK(local_factor(3, FactorRole::DividesDp, -8) == 0);
    CHECK(local_factor(3, FactorRole::DividesN, -8) == 2);
    CHECK(local_factor(2, FactorRole::DividesDp, -8) == 1);
    CHECK(local_factor(5, FactorRole::DividesN, -8) == 0);
    CHECK(local_factor(7, FactorRole::Other, -8) == 1);
    // ell = 2 uses the field discriminant: -1 has D_K = -4, ramified at 2.
    CHECK(local_factor(2, FactorRole::DividesDp, -4) == 1);
    CHECK(to_string(FactorRole::DividesN) == "divides-N");
}

TEST_CASE("worked example: D = 2, N = 1, d = -2, p = 5") {
    CountingInput in{2, 1, -2, 1, 5};
    NuReport n = nu_counts(in);
    CHECK(n.class_number == 1);
    CHECK(n.nu_H == 1);
    CHECK(n.nu_H_plus == 2);
    CHECK(n.nu_B == 2);
    CHECK(n.nu_B_plus == 4);
    CHECK(cm_p(in) == 2);
    CHECK(cm_inf(in) == 2);
    FormClassNumbers h = form_class_numbers(in);
    CHECK(h.h_p == n.nu_H);
    CHECK(h.h_inf == n.nu_B);
    CHECK(existence_criterion(in));
}

TEST_CASE("validation names the violated precondition") {
    auto msg = [](CountingInput in) {
        try {
            validate(in);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(msg({2, 1, -2, 1, 5}).empty());
    CHECK(msg({2, 1, -1, 1, 5}).find("p-imaginary") != std::string::npos);
    CHECK(msg({6, 1, -2, 1, 5}).find("odd number") != std::string::npos);
    CHECK(msg({2, 4, -2, 1, 5}).find("square-free") != std::string::npos);
    CHECK(msg({2, 2, -2, 1, 5}).find("coprime") != std::string::npos);
    CHECK(msg({2, 1, -2, 1, 4}).find("odd prime") != std::string::npos);
    CHECK(msg({2, 1, -2, 5, 5}).find("coprime") != std::string::npos);
    CHECK(msg({2, 1, 3, 1, 5}).find("negative") != std::string::npos);
    CHECK(msg({2, 5, -2, 1, 5}).find("divide") != std::string::npos);
}

TEST_CASE("relations on the admissible grid") {
    auto grid = admissible_grid();
    CHECK(grid.size() >= 50);
    for (const CountingInput& in : grid) {
        NuReport n = nu_counts(in);
        INFO("D=" << to_string(in.D) << " N=" << to_string(in.N) << " d=" << to_string(in.d) << " p=" << to_string(in.p));
        CHECK(n.nu_B_plus == 2 * n.nu_B);
        CHECK(n.nu_H_plus == 2 * n.nu_H);
        CHECK(n.nu_B == 2 * n.nu_H);
        CHECK(cm_p(in) % 2 == 0);
        CHECK(cm_p(in) == cm_inf(in));
        CHECK(n.class_number == oracle::class_number_analytic(quadratic_order(in.d, in.m).discriminant.get_si()));
        // Existence: every ell | Dp non-split, every ell | N non-inert.
        bool exists = true;
        Integer fd = quadratic_order(in.d, 1).field_discriminant;
        for (const Integer& ell : prime_divisors(in.D * in.p)) exists = exists && kronecker(fd, ell) != 1;
        for (const Integer& ell : prime_divisors(in.N)) exists = exists && kronecker(fd, ell) != -1;
        CHECK(existence_criterion(in) == exists);
        CHECK((cm_p(in) > 0) == exists);
    }
}
