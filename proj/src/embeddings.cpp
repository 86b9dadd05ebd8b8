#include "pcm/embeddings.hpp"

#include <stdexcept>

namespace pcm {

RepTriple RepTriple::from_rationals(const Rational& x, const Rational& y, const Rational& z, const Integer& p) {
    RepTriple r;
    r.p = p;
    std::array<Rational, 3> v{x, y, z};
    bool all_zero = x == 0 && y == 0 && z == 0;
    if (all_zero) {
        r.scaled = {0, 0, 0};
        return r;
    }
    long k = std::numeric_limits<long>::min();
    for (const Rational& c : v) {
        if (c != 0) k = std::max(k, -valuation(c, p));
    }
    Rational scale = k >= 0 ? Rational(ipow(p, k)) : Rational(1, ipow(p, -k));
    Integer g = 0;
    for (const Rational& c : v) {
        Rational s = c * scale;
        if (!is_integral(s)) throw std::invalid_argument("coordinates are not in Z[1/p]");
        r.scaled.push_back(s.get_num());
        g = gcd(g, s.get_num());
    }
    r.level = k;
    r.primitive = g == 1;
    return r;
}

std::array<Rational, 3> RepTriple::values() const {
    Rational scale = level >= 0 ? Rational(1, ipow(p, level)) : Rational(ipow(p, -level));
    return {scaled[0] * scale, scaled[1] * scale, scaled[2] * scale};
}

std::array<ZInvP, 3> RepTriple::coords() const {
    auto v = values();
    return {ZInvP(v[0], p), ZInvP(v[1], p), ZInvP(v[2], p)};
}

RepTriple RepTriple::negated() const {
    RepTriple r = *this;
    for (Integer& c : r.scaled) c = -c;
    return r;
}

std::vector<RepTriple> rep_search(const QuadForm& f, const Integer& t, const Integer& p, int kmax) {
    if (f.dimension() != 3) throw std::invalid_argument("representation search expects a ternary form");
    if (!f.is_positive_definite()) throw std::invalid_argument("representation search needs a positive definite form");
    if (t <= 0) throw std::invalid_argument("target must be positive");
    if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
    std::vector<RepTriple> out;
    long low = -valuation(t, p) / 2;
    for (long k = low; k <= kmax; ++k) {
        Rational target = k >= 0 ? Rational(t * ipow(p, 2 * k)) : Rational(t, ipow(p, -2 * k));
        for (const IntVector& v : f.solutions(target)) {
            Integer g = gcd(gcd(v[0], v[1]), v[2]);
            if (g % p == 0) continue;
            RepTriple r;
            r.p = p;
            r.level = k;
            r.scaled = v;
            r.primitive = g == 1;
            out.push_back(std::move(r));
        }
    }
    return out;
}

Embedding rho_star_inverse(const RepTriple& r, const EichlerOrder& O, const QuadraticOrder& K, const Integer& p) {
    PrimeSuborder Op(O);
    const QuaternionAlgebra& A = O.algebra();
    auto [x, y, z] = r.values();
    Quaternion alpha = Op.pure_element(x, y, z);
    Rational target = -Rational(K.m * K.m * K.field_discriminant);
    if (norm(A, alpha) != target) {
        throw std::invalid_argument("representation has norm " + to_string(norm(A, alpha)) + ", expected " +
                                    to_string(target));
    }
    Embedding phi;
    phi.order = K;
    phi.alpha = alpha;
    if (K.d_is_one_mod_four()) {
        phi.sqrt_d = Rational(1, K.m) * alpha;
        phi.generator = Rational(1, 2) * (Quaternion::scalar(K.m) + alpha);
    } else {
        phi.sqrt_d = Rational(1, 2 * K.m) * alpha;
        phi.generator = Rational(1, 2) * alpha;
    }
    if (trace(phi.sqrt_d) != 0 || norm(A, phi.sqrt_d) != -Rational(K.d)) {
        throw std::logic_error("image of sqrt(d) fails its minimal polynomial");
    }
    if (!O.contains_localized(phi.generator, p)) {
        throw std::invalid_argument("generator image " + to_string(phi.generator) + " is not in O[1/p]");
    }
    phi.optimal = r.primitive;
    return phi;
}

RepTriple rho_star(const Embedding& phi, const EichlerOrder& O, const Integer& p) {
    Coords4 c = O.coordinates(phi.generator);
    return RepTriple::from_rationals(c[1], c[2], c[3], p);
}

BinaryFormP embedding_to_form(const Embedding& phi, const MatrixImmersion& Phi) {
    return form_from_matrix(Phi(phi.alpha));
}

Embedding conjugate_embedding(const Embedding& phi) {
    Embedding out = phi;
    out.sqrt_d = -phi.sqrt_d;
    out.alpha = -phi.alpha;
    const QuadraticOrder& K = phi.order;
    out.generator = K.d_is_one_mod_four() ? Rational(1, 2) * (Quaternion::scalar(K.m) + out.alpha)
                                          : Rational(1, 2) * out.alpha;
    return out;
}

bool optimal_by_intersection(const Embedding& phi, const EichlerOrder& O, const Integer& p) {
    // In both congruence classes the generator of O_{K,m/ell} maps to omega/ell.
    for (const Integer& ell : prime_divisors(phi.order.m)) {
        if (ell == p) continue;
        if (O.contains_localized(Rational(1, ell) * phi.generator, p)) return false;
    }
    return true;
}

std::vector<FixedPoint> embedding_fixed_points(const Embedding& phi, const MatrixImmersion& Phi) {
    return fixed_points(Phi(phi.alpha));
}

}  // namespace pcm
