#pragma once

#include "pcm/orders.hpp"
#include "pcm/transforms.hpp"

#include <array>
#include <vector>

namespace pcm {

inline constexpr int kDefaultKmax = 2;

/// A representation over Z[1/p], stored canonically: p^level * (x, y, z) is
/// an integer vector whose gcd is prime to p.
struct RepTriple {
    Integer p;
    long level = 0;
    IntVector scaled;
    /// The Z[1/p]-ideal (x, y, z) is the unit ideal, i.e. gcd(scaled) == 1.
    bool primitive = false;

    static RepTriple from_rationals(const Rational& x, const Rational& y, const Rational& z, const Integer& p);
    std::array<Rational, 3> values() const;
    std::array<ZInvP, 3> coords() const;
    RepTriple negated() const;

    friend bool operator==(const RepTriple& a, const RepTriple& b) {
        return a.p == b.p && a.level == b.level && a.scaled == b.scaled;
    }
};

/// Every canonical Z[1/p]-representation of t by f with level k <= kmax,
/// grouped by level and lexicographic inside a level. Levels below 0 appear
/// only when p^2 divides t. Complete up to the bound, not beyond it.
std::vector<RepTriple> rep_search(const QuadForm& f, const Integer& t, const Integer& p, int kmax = kDefaultKmax);

/// An embedding of O_{K,m}[1/p] into O[1/p], recorded by images.
struct Embedding {
    QuadraticOrder order;
    Quaternion sqrt_d;     // image of sqrt(d)
    Quaternion generator;  // image of m*sqrt(d) (d = 2,3 mod 4) or m(1+sqrt d)/2 (d = 1 mod 4)
    Quaternion alpha;      // image of m*sqrt(D_K), pure
    bool optimal = false;
};

/// Builds the embedding attached to r. Throws std::invalid_argument when r
/// does not represent -m^2 D_K or its generator falls outside O[1/p].
Embedding rho_star_inverse(const RepTriple& r, const EichlerOrder& O, const QuadraticOrder& K, const Integer& p);

/// Order-basis coordinates 2..4 of the generator image.
RepTriple rho_star(const Embedding& phi, const EichlerOrder& O, const Integer& p);

/// f_{Phi_p(phi(m sqrt D_K))}.
BinaryFormP embedding_to_form(const Embedding& phi, const MatrixImmersion& Phi);

/// sqrt(d) -> -phi(sqrt(d)).
Embedding conjugate_embedding(const Embedding& phi);

/// Optimality by the lattice characterization: no generator of an order of
/// conductor m/ell (ell | m, ell != p) lands in O[1/p].
bool optimal_by_intersection(const Embedding& phi, const EichlerOrder& O, const Integer& p);

std::vector<FixedPoint> embedding_fixed_points(const Embedding& phi, const MatrixImmersion& Phi);

}  // namespace pcm
