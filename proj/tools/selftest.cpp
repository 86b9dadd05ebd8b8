#include "cli.hpp"

#include "json_io.hpp"

#include <functional>

namespace pcm::cli {

using nlohmann::json;

namespace {

QuadForm polynomial_form(std::size_t n, std::map<std::pair<std::size_t, std::size_t>, Rational> coeff) {
    return QuadForm::from_coefficients(n, coeff);
}

bool has_display(const std::vector<CMPair>& pairs, const Integer& d, const std::string& text) {
    for (const CMPair& pr : pairs) {
        if (pr.plus.display(d) == text || pr.minus.display(d) == text) return true;
    }
    return false;
}

const CMPoint* find_point(const std::vector<CMPair>& pairs, const Integer& d, const std::string& text) {
    for (const CMPair& pr : pairs) {
        if (pr.plus.display(d) == text) return &pr.plus;
        if (pr.minus.display(d) == text) return &pr.minus;
    }
    return nullptr;
}

}  // namespace

json selftest(long precision) {
    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        std::string detail;
        try {
            ok = body();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        all = all && ok;
        json j{{"name", name}, {"passed", ok}};
        if (!detail.empty()) j["error"] = detail;
        checks.push_back(j);
    };

    const Integer p = 5, d = -2;
    QuaternionAlgebra H(-1, -1);
    EichlerOrder O = hurwitz_order();
    PrimeSuborder Op = prime_suborder(O);

    check("(-1,-1) has discriminant 2 and is definite", [&] {
        Ramification r = ramification(H);
        return r.discriminant == 2 && r.definite;
    });
    check("rho = (1+i+j+k)/2 has trace 1 and norm 1", [&] {
        Quaternion rho = O.basis()[3];
        return trace(rho) == 1 && norm(H, rho) == 1;
    });
    check("O' = Z + 2O has basis {1, 2i, 2j, i+j+k}", [&] {
        const auto& b = Op.basis();
        return b[1] == Quaternion{0, 2, 0, 0} && b[2] == Quaternion{0, 0, 2, 0} && b[3] == Quaternion{0, 1, 1, 1};
    });
    check("N_{O',3} = (2X+Z)^2 + (2Y+Z)^2 + Z^2", [&] {
        return ternary_normic_form(Op) == polynomial_form(3, {{{0, 0}, 4}, {{1, 1}, 4}, {{2, 2}, 3}, {{0, 2}, 4}, {{1, 2}, 4}});
    });
    check("N_{O',4} = X^2 + (2Y+T)^2 + (2Z+T)^2 + T^2", [&] {
        return quaternary_normic_form(Op) ==
               polynomial_form(4, {{{0, 0}, 1}, {{1, 1}, 4}, {{2, 2}, 4}, {{3, 3}, 3}, {{1, 3}, 4}, {{2, 3}, 4}});
    });
    check("(0,-1,2) is a primitive representation of 8 at level 0", [&] {
        for (const RepTriple& r : rep_search(ternary_normic_form(Op), 8, p, 0)) {
            if (r.scaled == IntVector{0, -1, 2}) return r.primitive;
        }
        return false;
    });
    RepTriple r0 = RepTriple::from_rationals(0, -1, 2, p);
    check("(0,-1,2) maps to (a,b,c) = (0,2,-2)", [&] {
        ABCTriple t = abc_from_rep(r0);
        return t.a == 0 && t.b == 2 && t.c == -2;
    });
    check("family form of (0,2,-2) has determinant 8 and equals f_p of the embedding", [&] {
        FamilyContext ctx(p, precision);
        BinaryFormP f = family_form(abc_from_rep(r0), ctx);
        Embedding e = rho_star_inverse(r0, O, quadratic_order(d, 1), p);
        return padic_equal(f.determinant(), PAdic::from_rational(8, p, precision)) &&
               form_equal(f, embedding_to_form(e, ctx.immersion()));
    });
    check("cm_5(2,1,-2,1) = cm_inf(10,1,-2,1) = 2", [&] {
        CountingInput in{2, 1, d, 1, p};
        return cm_p(in) == 2 && cm_inf(in) == 2;
    });
    check("sqrt(-1) in Q_5 to 3 digits is 2 + 1*5 + 2*5^2", [&] {
        PAdic i = hensel_sqrt(PAdic::from_rational(-1, p, 3));
        return i.unit_digits() == std::vector<Integer>{2, 1, 2};
    });
    check("points 1 + i sqrt(-2), 1 - i sqrt(-2), -1 + i sqrt(-2), -1 - i sqrt(-2) are produced", [&] {
        FamilyContext ctx(p, precision);
        auto pairs = family_cm_points(d, 1, 0, ctx);
        return has_display(pairs, d, "1 + i√-2") && has_display(pairs, d, "1 - i√-2") &&
               has_display(pairs, d, "-1 + i√-2") && has_display(pairs, d, "-1 - i√-2");
    });
    check("the unit i maps 1 - i sqrt(-2) to -1 + i sqrt(-2)", [&] {
        FamilyContext ctx(p, precision);
        auto pairs = family_cm_points(d, 1, 0, ctx);
        const CMPoint* z = find_point(pairs, d, "1 - i√-2");
        const CMPoint* w = find_point(pairs, d, "-1 + i√-2");
        if (z == nullptr || w == nullptr) return false;
        return quadext_equal(ctx.immersion()(Quaternion{0, 1, 0, 0}).act(z->value), w->value);
    });
    check("counting relations and cm_p = cm_inf on the admissible grid", [&] {
        auto grid = admissible_grid();
        if (grid.size() < 50) return false;
        for (const CountingInput& in : grid) {
            NuReport n = nu_counts(in);
            if (n.nu_B_plus != 2 * n.nu_B || n.nu_H_plus != 2 * n.nu_H || n.nu_B != 2 * n.nu_H) return false;
            Integer c = cm_p(in);
            if (c % 2 != 0 || c != cm_inf(in)) return false;
            if (existence_criterion(in) != (n.nu_B_plus > 0)) return false;
        }
        return true;
    });
    return {{"passed", all}, {"checks", checks}};
}

}  // namespace pcm::cli
