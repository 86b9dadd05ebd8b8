#include "doctest.h"
#include "properties.hpp"

#include "pcm/embeddings.hpp"
#include "pcm/family2p.hpp"

using namespace pcm;

namespace {

const QuadForm& N3() {
    static const QuadForm f = ternary_normic_form(prime_suborder(hurwitz_order()));
    return f;
}

}  // namespace

TEST_CASE("representations of 8 at level 0") {
    auto reps = rep_search(N3(), 8, 5, 0);
    CHECK(reps.size() == 12);
    RepTriple r = RepTriple::from_rationals(0, -1, 2, 5);
    CHECK(std::find(reps.begin(), reps.end(), r) != reps.end());
    for (const RepTriple& x : reps) {
        CHECK(x.primitive);
        auto v = x.values();
        CHECK(N3().evaluate(std::vector<Rational>(v.begin(), v.end())) == 8);
    }
}

TEST_CASE("levels are canonical") {
    RepTriple r = RepTriple::from_rationals(0, Rational(-1, 5), Rational(2, 5), 5);
    CHECK(r.level == 1);
    CHECK(r.scaled == IntVector{0, -1, 2});
    RepTriple s = RepTriple::from_rationals(0, -5, 10, 5);
    CHECK(s.level == -1);
    CHECK(s.scaled == IntVector{0, -1, 2});
    // p^2 | 200, so level -1 appears.
    auto reps = rep_search(N3(), 200, 5, 0);
    CHECK(std::find(reps.begin(), reps.end(), s) != reps.end());
    CHECK(r.negated().scaled == IntVector{0, 1, -2});
}

TEST_CASE("level counts grow with kmax") {
    auto k0 = rep_search(N3(), 8, 5, 0);
    auto k1 = rep_search(N3(), 8, 5, 1);
    CHECK(k1.size() == 84);
    for (std::size_t i = 0; i < k0.size(); ++i) CHECK(k0[i] == k1[i]);
    for (const RepTriple& r : k1) {
        auto v = r.values();
        CHECK(N3().evaluate(std::vector<Rational>(v.begin(), v.end())) == 8);
    }
}

TEST_CASE("the embedding attached to (0,-1,2)") {
    EichlerOrder O = hurwitz_order();
    Embedding e = rho_star_inverse(RepTriple::from_rationals(0, -1, 2, 5), O, quadratic_order(-2, 1), 5);
    QuaternionAlgebra H = O.algebra();
    CHECK(multiply(H, e.sqrt_d, e.sqrt_d) == Quaternion::scalar(-2));
    CHECK(e.sqrt_d.is_pure());
    CHECK(e.alpha == Quaternion{0, 2, 0, 2});
    CHECK(e.optimal);
    CHECK(rho_star(conjugate_embedding(e), O, 5) == RepTriple::from_rationals(0, -1, 2, 5).negated());
    CHECK_THROWS_AS(rho_star_inverse(RepTriple::from_rationals(1, 0, 0, 5), O, quadratic_order(-2, 1), 5),
                    std::invalid_argument);
}

TEST_CASE("bijection round trips") {
    for (long d : {-2L, -10L, -26L}) {
        props::BijectionSweep s = props::bijection_sweep(d, 1, 5, 1, 32);
        INFO("d = " << d);
        CHECK(s.reps > 0);
        CHECK(s.round_trip_failures == 0);
        CHECK(s.optimality_mismatches == 0);
        CHECK(s.template_failures == 0);
    }
}

TEST_CASE("non-optimal embeddings at conductor 3") {
    // m = 3: triples divisible by 3 come from the maximal order and are not optimal.
    props::BijectionSweep s = props::bijection_sweep(-2, 3, 5, 0, 32);
    CHECK(s.reps > 12);
    CHECK(s.round_trip_failures == 0);
    CHECK(s.optimality_mismatches == 0);
    long primitive = 0;
    for (const RepTriple& r : rep_search(N3(), 72, 5, 0)) primitive += r.primitive ? 1 : 0;
    CHECK(primitive < static_cast<long>(rep_search(N3(), 72, 5, 0).size()));
}

TEST_CASE("embedding fixed points are the family points") {
    FamilyContext ctx(5, 32);
    RepTriple r = RepTriple::from_rationals(0, -1, 2, 5);
    Embedding e = rho_star_inverse(r, ctx.order(), quadratic_order(-2, 1), 5);
    auto fps = embedding_fixed_points(e, ctx.immersion());
    REQUIRE(fps.size() == 2);
    for (const CMPair& pr : family_cm_points(-2, 1, 0, ctx)) {
        if (!(pr.rep == r)) continue;
        bool plus = quadext_equal(fps[0].z, pr.plus.value) || quadext_equal(fps[1].z, pr.plus.value);
        bool minus = quadext_equal(fps[0].z, pr.minus.value) || quadext_equal(fps[1].z, pr.minus.value);
        CHECK(plus);
        CHECK(minus);
    }
}
