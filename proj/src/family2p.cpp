#include "pcm/family2p.hpp"

#include <stdexcept>

namespace pcm {

namespace {

Integer require_family_prime(const Integer& p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (p % 4 != 1) throw std::invalid_argument("the discriminant-2p family needs p = 1 mod 4");
    return p;
}

PAdic lift(const Rational& q, const Integer& p, long precision) {
    return q == 0 ? PAdic::zero(p) : PAdic::from_rational(q, p, precision);
}

PAdic truncated(const PAdic& x, long prec) { return x.with_relative_precision(prec); }

// Q_{p^2} value of u0 + u1 i + (u2 + u3 i) sqrt(d). Extra digits are added
// until both components carry prec significant digits, then dropped.
QuadExt point_value(const std::array<Rational, 4>& u, const Integer& d, const Integer& p, const Integer& eps,
                    long prec) {
    long guard = 0;
    for (int attempt = 0;; ++attempt) {
        long w = prec + guard;
        PAdic i = hensel_sqrt(PAdic::from_rational(-1, p, w));
        QuadExt root = sqrt_in_quadext(d, p, w);
        PAdic re = lift(u[0], p, w) + lift(u[1], p, w) * i;
        PAdic im = lift(u[2], p, w) + lift(u[3], p, w) * i;
        QuadExt v = QuadExt::from_base(re, eps) + QuadExt::from_base(im, eps) * root;
        long short_by = 0;
        for (const PAdic* c : {&v.x(), &v.y()}) {
            if (!c->is_zero()) short_by = std::max(short_by, prec - c->relative_precision());
        }
        if (short_by <= 0) return QuadExt(truncated(v.x(), prec), truncated(v.y(), prec), eps);
        if (attempt == 8) throw PrecisionError("CM point value did not reach the working precision");
        guard += short_by;
    }
}

// Integral representative p^k (a, b, c) with the p-power cleared.
std::array<Integer, 3> cleared(const ABCTriple& t, const Integer& p) {
    long k = 0;
    for (const Rational& v : {t.a, t.b, t.c}) {
        if (v != 0) k = std::max(k, -valuation(v, p));
    }
    Integer s = ipow(p, k);
    std::array<Integer, 3> out;
    std::size_t i = 0;
    for (const Rational& v : {t.a, t.b, t.c}) {
        Rational w = v * s;
        if (!is_integral(w)) throw std::invalid_argument("triple is not in Z[1/p]");
        out[i++] = w.get_num();
    }
    return out;
}

std::string coefficient_term(const Rational& c, const std::string& symbol, bool first) {
    std::string s;
    if (first) {
        if (c < 0) s += "-";
    } else {
        s += c < 0 ? " - " : " + ";
    }
    Rational a = abs(c);
    if (symbol.empty()) return s + to_string(a);
    if (a != 1) s += to_string(a);
    return s + symbol;
}

}  // namespace

FamilyContext::FamilyContext(Integer p, long precision)
    : p_(require_family_prime(p)),
      precision_(precision),
      order_(hurwitz_order()),
      immersion_(phi_p(order_.algebra(), p_, precision)),
      eps_(canonical_eps(p_)) {}

bool ABCTriple::parity_ok(const Integer& p) const {
    auto v = cleared(*this, p);
    return (v[1] + v[2]) % 2 == 0 && (v[0] + v[1]) % 2 == 0;
}

bool ABCTriple::primitive(const Integer& p) const {
    if (!parity_ok(p)) return false;
    std::vector<ZInvP> gens{ZInvP((a + b) / 2, p), ZInvP((c + b) / 2, p), ZInvP(b, p)};
    return zinvp_ideal_generator(gens) == 1;
}

ABCTriple abc_from_rep(const RepTriple& r) {
    auto [x, y, z] = r.values();
    return {-(2 * y + z), z, -(2 * x + z)};
}

BinaryFormP family_form(const ABCTriple& t, const FamilyContext& ctx) {
    if (!t.parity_ok(ctx.p())) throw std::invalid_argument("triple violates b + c = a + b = 0 mod 2");
    const Integer& p = ctx.p();
    const long prec = ctx.precision();
    // a +- b i may cancel; lift i further until every coefficient keeps prec digits.
    long guard = 0;
    for (int attempt = 0;; ++attempt) {
        long w = prec + guard;
        PAdic i = guard == 0 ? ctx.i_p() : hensel_sqrt(PAdic::from_rational(-1, p, w));
        PAdic a = lift(t.a, p, w), b = lift(t.b, p, w), c = lift(t.c, p, w);
        PAdic bi = b * i;
        BinaryFormP f{a + bi, (c * i).times(2), a - bi};
        long short_by = 0;
        for (const PAdic* x : {&f.A, &f.B, &f.C}) {
            if (!x->is_zero()) short_by = std::max(short_by, prec - x->relative_precision());
        }
        if (short_by <= 0) return {truncated(f.A, prec), truncated(f.B, prec), truncated(f.C, prec)};
        if (attempt == 8) throw PrecisionError("family form did not reach the working precision");
        guard += short_by;
    }
}

std::string CMPoint::display(const Integer& d) const {
    const std::string root = "√" + to_string(d);
    const std::string symbols[4] = {"", "i", root, "i" + root};
    std::string s;
    for (std::size_t n = 0; n < 4; ++n) {
        if (exact[n] == 0) continue;
        s += coefficient_term(exact[n], symbols[n], s.empty());
    }
    return s.empty() ? "0" : s;
}

std::vector<CMPair> family_cm_points(const Integer& d, const Integer& m, int kmax, const FamilyContext& ctx) {
    const Integer& p = ctx.p();
    const long prec = ctx.precision();
    if (d >= 0) throw std::invalid_argument("d must be negative");
    QuadraticOrder K = quadratic_order(d, m);
    if (legendre(d, p) != -1) throw std::invalid_argument("(d/p) must be -1: K must be p-imaginary");

    PrimeSuborder Op = prime_suborder(ctx.order());
    Integer t = -K.m * K.m * K.field_discriminant;
    auto reps = rep_search(ternary_normic_form(Op), t, p, kmax);

    const Integer& eps = ctx.eps();
    Integer r = K.d_is_one_mod_four() ? K.m : 2 * K.m;  // m sqrt(D_K) = r sqrt(d)

    std::vector<CMPair> out;
    for (const RepTriple& rep : reps) {
        if (!rep.primitive) continue;
        ABCTriple abc = abc_from_rep(rep);
        if (abc.a == 0 && abc.b == 0) throw std::logic_error("a + b i vanishes; D_K would be -4");
        BinaryFormP form = family_form(abc, ctx);
        Rational n2 = abc.a * abc.a + abc.b * abc.b;
        Rational ra = r * abc.a / n2, rb = r * abc.b / n2;
        Rational u0 = -abc.c * abc.b / n2, u1 = -abc.c * abc.a / n2;
        std::array<Rational, 4> plus{u0, u1, ra, -rb}, minus{u0, u1, -ra, rb};
        CMPair pair{rep, abc, form, CMPoint{plus, point_value(plus, d, p, eps, prec)},
                    CMPoint{minus, point_value(minus, d, p, eps, prec)}};
        out.push_back(std::move(pair));
    }
    return out;
}

ClassFiltering filter_classes(const std::vector<CMPair>& pairs, const EquivalenceSearcher& searcher) {
    ClassFiltering f;
    f.kmax = searcher.space().kmax();
    for (std::size_t n = 0; n < pairs.size(); ++n) {
        for (bool plus : {true, false}) {
            const QuadExt& z = plus ? pairs[n].plus.value : pairs[n].minus.value;
            ClassMember member{n, plus, 0, std::nullopt, 0};
            bool placed = false;
            for (std::size_t c = 0; c < f.representatives.size() && !placed; ++c) {
                const ClassMember& rep = f.representatives[c];
                const QuadExt& zr = rep.plus ? pairs[rep.pair_index].plus.value : pairs[rep.pair_index].minus.value;
                EquivalenceVerdict v = searcher.find(zr, z);
                if (v.equivalent) {
                    member.class_index = c;
                    member.witness = v.witness;
                    member.witness_level = v.level;
                    placed = true;
                }
            }
            if (!placed) {
                member.class_index = f.representatives.size();
                member.witness = Quaternion::scalar(1);
                f.representatives.push_back(member);
            }
            f.members.push_back(member);
        }
    }
    return f;
}

}  // namespace pcm
