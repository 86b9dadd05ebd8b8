#include "pcm/equivalence.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace pcm {

namespace {

QuadExt scale(const QuadExt& z, const Rational& c, long precision) {
    if (c == 0) return QuadExt(PAdic::zero(z.p()), PAdic::zero(z.p()), z.eps());
    PAdic s = PAdic::from_rational(c, z.p(), precision);
    return QuadExt(z.x() * s, z.y() * s, z.eps());
}

bool divisible_by(const IntVector& v, const Integer& p) {
    for (const Integer& c : v) {
        if (c % p != 0) return false;
    }
    return true;
}

bool leading_positive(const IntVector& v) {
    for (const Integer& c : v) {
        if (c != 0) return c > 0;
    }
    return false;
}

}  // namespace

std::vector<Quaternion> norm_sphere(const EichlerOrder& O, const Integer& M) {
    if (!O.algebra().is_definite()) throw std::invalid_argument("norm spheres are finite only in definite algebras");
    if (M < 0) throw std::invalid_argument("norm must be non-negative");
    std::vector<Quaternion> out;
    for (const IntVector& c : O.norm_form().solutions(Rational(M))) out.push_back(O.element(c));
    return out;
}

UnitSearchSpace::UnitSearchSpace(const EichlerOrder& O, const Integer& p, int kmax) : order_(O), p_(p), kmax_(kmax) {
    if (!O.algebra().is_definite()) throw std::invalid_argument("unit search needs a definite algebra");
    if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
    QuadForm nf = O.norm_form();
    for (long k = 0; k <= kmax; ++k) {
        for (const IntVector& c : nf.solutions(Rational(ipow(p, 2 * k)))) {
            if (k > 0 && divisible_by(c, p)) continue;
            if (!leading_positive(c)) continue;
            elements_.push_back({O.element(c), c, k});
        }
    }
}

std::size_t UnitSearchSpace::level_size(long k) const {
    return static_cast<std::size_t>(
        std::count_if(elements_.begin(), elements_.end(), [k](const SearchElement& e) { return e.level == k; }));
}

EquivalenceSearcher::EquivalenceSearcher(const EichlerOrder& O, const MatrixImmersion& Phi, int kmax)
    : space_(O, Phi.p(), kmax), Phi_(Phi) {
    const auto& A = O.algebra();
    const auto& B = Phi.algebra();
    if (A.a() != B.a() || A.b() != B.b()) throw std::invalid_argument("immersion and order use different algebras");
}

bool EquivalenceSearcher::verify(const Quaternion& w, const QuadExt& z1, const QuadExt& z2) const {
    return quadext_equal(Phi_(w).act(z1), z2);
}

// Phi(w) z1 = z2 is linear in w = x + yi + zj + tk:
//   x (z1 - z2) + y s (z1 + z2) + z (1 - b z1 z2) + t s (1 + b z1 z2) = 0,
// with s = sqrt(a). Its coefficients on the order basis are reduced mod p^e
// once, so each element costs four word multiplications; survivors are
// re-verified by the Moebius action.
std::vector<std::size_t> EquivalenceSearcher::candidates(const QuadExt& z1, const QuadExt& z2, bool first_only) const {
    const Integer& p = Phi_.p();
    const long prec = Phi_.precision();
    const Integer eps = z1.eps();
    QuadExt one = QuadExt::from_rational(1, p, eps, prec);
    QuadExt s = QuadExt::from_base(Phi_.sqrt_a(), eps);
    QuadExt bz = scale(z1 * z2, Phi_.algebra().b(), prec);
    std::array<QuadExt, 4> lambda{z1 - z2, s * (z1 + z2), one - bz, s * (one + bz)};

    std::array<QuadExt, 4> mu{one, one, one, one};
    const auto& basis = space_.order().basis();
    for (std::size_t j = 0; j < 4; ++j) {
        auto c = basis[j].coords();
        QuadExt acc = scale(lambda[0], c[0], prec);
        for (std::size_t i = 1; i < 4; ++i) acc = acc + scale(lambda[i], c[i], prec);
        mu[j] = acc;
    }

    long vmin = kExactPrecision;
    for (const QuadExt& m : mu) {
        for (const PAdic* c : {&m.x(), &m.y()}) {
            if (!c->is_zero()) vmin = std::min(vmin, c->valuation());
        }
    }
    const auto& elems = space_.elements();
    std::vector<std::size_t> out;
    long e = 0;
    if (vmin < kExactPrecision) {
        e = kExactPrecision;
        for (const QuadExt& m : mu) {
            for (const PAdic* c : {&m.x(), &m.y()}) e = std::min(e, c->absolute_precision() - vmin);
        }
        Integer bound = Integer(1) << 30;
        long emax = 0;
        for (Integer pe = p; pe <= bound; pe *= p) ++emax;
        e = std::min(e, emax);
    }
    if (e < 1) {
        for (std::size_t n = 0; n < elems.size(); ++n) {
            out.push_back(n);
            if (first_only && verify(elems[n].q, z1, z2)) return out;
        }
        return out;
    }

    Integer modulus = ipow(p, e);
    const std::uint64_t M = modulus.get_ui();
    std::array<std::uint64_t, 8> coef{};
    for (std::size_t j = 0; j < 4; ++j) {
        const PAdic* comps[2] = {&mu[j].x(), &mu[j].y()};
        for (std::size_t h = 0; h < 2; ++h) {
            const PAdic& c = *comps[h];
            Integer r = 0;
            if (!c.is_zero()) {
                r = c.unit() * ipow(p, c.valuation() - vmin);
                mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
            }
            coef[2 * j + h] = r.get_ui();
        }
    }
    auto reduce = [&](const Integer& n) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
        return static_cast<std::uint64_t>(r.get_ui());
    };
    for (std::size_t n = 0; n < elems.size(); ++n) {
        const IntVector& c = elems[n].coords;
        std::uint64_t sx = 0, sy = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            std::uint64_t cj = reduce(c[j]);
            sx = (sx + cj * coef[2 * j] % M) % M;
            sy = (sy + cj * coef[2 * j + 1] % M) % M;
        }
        if (sx != 0 || sy != 0) continue;
        out.push_back(n);
        if (first_only && verify(elems[n].q, z1, z2)) return out;
    }
    return out;
}

EquivalenceVerdict EquivalenceSearcher::find(const QuadExt& z1, const QuadExt& z2) const {
    EquivalenceVerdict v;
    v.kmax = space_.kmax();
    std::vector<std::size_t> cands = candidates(z1, z2, true);
    if (!cands.empty()) {
        const SearchElement& e = space_.elements()[cands.back()];
        if (verify(e.q, z1, z2)) {
            v.equivalent = true;
            v.witness = e.q;
            v.level = e.level;
        }
    }
    return v;
}

std::vector<SearchElement> EquivalenceSearcher::all_witnesses(const QuadExt& z1, const QuadExt& z2) const {
    std::vector<SearchElement> out;
    for (std::size_t n : candidates(z1, z2, false)) {
        const SearchElement& e = space_.elements()[n];
        if (verify(e.q, z1, z2)) out.push_back(e);
    }
    return out;
}

EquivalenceVerdict gamma_plus_equivalent(const QuadExt& z1, const QuadExt& z2, const EichlerOrder& O,
                                         const MatrixImmersion& Phi, int kmax) {
    return EquivalenceSearcher(O, Phi, kmax).find(z1, z2);
}

ConjugateCheck conjugate_class_check(const QuadExt& z, const EquivalenceSearcher& searcher) {
    if (z.in_base()) throw std::invalid_argument("point lies in Q_p, not in the p-adic upper half plane");
    ConjugateCheck r;
    r.elements_searched = searcher.space().elements().size();
    auto ws = searcher.all_witnesses(z, galois_conj(z));
    r.witnesses_found = ws.size();
    r.distinct = ws.empty();
    if (!ws.empty()) r.witness = ws.front().q;
    for (const auto& w : ws) r.trace_zero_holds = r.trace_zero_holds && trace(w.q) == 0;
    return r;
}

ConjugateCheck conjugate_class_check(const QuadExt& z, const EichlerOrder& O, const MatrixImmersion& Phi, int kmax) {
    return conjugate_class_check(z, EquivalenceSearcher(O, Phi, kmax));
}

}  // namespace pcm
