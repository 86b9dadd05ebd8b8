#include "doctest.h"

#include "pcm/equivalence.hpp"
#include "pcm/family2p.hpp"

#include <set>

using namespace pcm;

namespace {

const FamilyContext& ctx() {
    static const FamilyContext c(5, 32);
    return c;
}

const CMPair* find_pair(const std::vector<CMPair>& pairs, const RepTriple& r) {
    for (const CMPair& pr : pairs) {
        if (pr.rep == r) return &pr;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("context") {
    CHECK(ctx().i_p().unit_digits().size() == 32);
    CHECK(padic_equal(ctx().i_p() * ctx().i_p(), PAdic::from_rational(-1, 5, 32)));
    CHECK(ctx().eps() == 2);
    CHECK_THROWS_AS(FamilyContext(7, 32), std::invalid_argument);
}

TEST_CASE("triples and forms") {
    RepTriple r = RepTriple::from_rationals(0, -1, 2, 5);
    ABCTriple t = abc_from_rep(r);
    CHECK(t.a == 0);
    CHECK(t.b == 2);
    CHECK(t.c == -2);
    CHECK(t.norm() == 8);
    CHECK(t.primitive(5));
    CHECK(t.parity_ok(5));
    BinaryFormP f = family_form(t, ctx());
    CHECK(padic_equal(f.determinant(), PAdic::from_rational(8, 5, 32)));
    CHECK(padic_equal(f.A, ctx().i_p().times(2)));
    CHECK(padic_equal(f.B, ctx().i_p().times(-4)));
    CHECK(padic_equal(f.C, -ctx().i_p().times(2)));
    ABCTriple bad{1, 0, 0};
    CHECK_FALSE(bad.parity_ok(5));
    CHECK_THROWS_AS(family_form(bad, ctx()), std::invalid_argument);
}

TEST_CASE("CM points of d = -2") {
    auto pairs = family_cm_points(-2, 1, 0, ctx());
    CHECK(pairs.size() == 12);
    const CMPair* pr = find_pair(pairs, RepTriple::from_rationals(0, -1, 2, 5));
    REQUIRE(pr != nullptr);
    // (-c i + 2 sqrt(-2)) / (b i) with (a, b, c) = (0, 2, -2).
    CHECK(pr->plus.display(-2) == "1 - i√-2");
    CHECK(pr->minus.display(-2) == "1 + i√-2");
    const CMPair* q = nullptr;
    for (const CMPair& x : pairs) {
        if (x.abc.a == 0 && x.abc.b == 2 && x.abc.c == 2) q = &x;
    }
    REQUIRE(q != nullptr);
    std::set<std::string> shown{q->plus.display(-2), q->minus.display(-2)};
    CHECK(shown == std::set<std::string>{"-1 + i√-2", "-1 - i√-2"});
    for (const CMPair& x : pairs) {
        CHECK(x.abc.norm() == 8);
        for (const CMPoint* z : {&x.plus, &x.minus}) {
            QuadExt v = x.form.evaluate(z->value);
            CHECK(std::min(v.x().valuation(), v.y().valuation()) >= 30);
            CHECK_FALSE(z->value.in_base());
        }
        CHECK(quadext_equal(x.minus.value, galois_conj(x.plus.value)));
    }
}

TEST_CASE("display of a level-1 point") {
    auto pairs = family_cm_points(-2, 1, 1, ctx());
    CHECK(pairs.size() == 84);
    bool seen = false;
    for (const CMPair& x : pairs) {
        seen = seen || x.plus.display(-2) == "-10/17 - 6/17i + 15/34√-2 - 25/34i√-2" ||
               x.minus.display(-2) == "-10/17 - 6/17i + 15/34√-2 - 25/34i√-2";
    }
    CHECK(seen);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(family_cm_points(-1, 1, 0, ctx()), std::invalid_argument);
    CHECK_THROWS_AS(family_cm_points(-4, 1, 0, ctx()), std::invalid_argument);
    CHECK_THROWS_AS(family_cm_points(-10, 1, 0, ctx()), std::invalid_argument);
}

TEST_CASE("class filtering at level 1") {
    auto pairs = family_cm_points(-2, 1, 1, ctx());
    EquivalenceSearcher S(ctx().order(), ctx().immersion(), 1);
    ClassFiltering f = filter_classes(pairs, S);
    CHECK(f.representatives.size() == 2);
    CHECK(f.members.size() == 2 * pairs.size());
    for (const ClassMember& m : f.members) {
        REQUIRE(m.witness.has_value());
        const ClassMember& rep = f.representatives[m.class_index];
        const CMPoint& from = rep.plus ? pairs[rep.pair_index].plus : pairs[rep.pair_index].minus;
        const CMPoint& to = m.plus ? pairs[m.pair_index].plus : pairs[m.pair_index].minus;
        CHECK(quadext_equal(ctx().immersion()(*m.witness).act(from.value), to.value));
    }
}
