#pragma once

#include "pcm/arith.hpp"
#include "pcm/quadform.hpp"
#include "pcm/quaternion.hpp"

#include <array>
#include <optional>
#include <string>

namespace pcm {

using Coords4 = std::array<Rational, 4>;

/// Z-order of a quaternion algebra given by a basis {1, v2, v3, v4} and a
/// declared level N. Construction checks that the basis is a lattice closed
/// under multiplication; the level is taken as given.
class EichlerOrder {
public:
    EichlerOrder(QuaternionAlgebra algebra, std::array<Quaternion, 4> basis, Integer level, std::string name = "");

    const QuaternionAlgebra& algebra() const { return algebra_; }
    const std::array<Quaternion, 4>& basis() const { return basis_; }
    const Integer& level() const { return level_; }
    const std::string& name() const { return name_; }

    /// Coordinates of q in the order basis.
    Coords4 coordinates(const Quaternion& q) const;
    Quaternion element(const Coords4& c) const;
    Quaternion element(const IntVector& c) const;

    bool contains(const Quaternion& q) const;
    /// Membership in O[1/p]: every basis coordinate lies in Z[1/p].
    bool contains_localized(const Quaternion& q, const Integer& p) const;

    /// Norm form on the order basis (4 variables).
    QuadForm norm_form() const;

private:
    QuaternionAlgebra algebra_;
    std::array<Quaternion, 4> basis_;
    Integer level_;
    std::string name_;
    std::array<Coords4, 4> inverse_;  // rows: coordinates of 1, i, j, k
};

/// The order Z[1, i, j, (1+i+j+k)/2] of (-1, -1 / Q): discriminant 2, level 1.
EichlerOrder builtin_order(const std::string& name);
EichlerOrder hurwitz_order();

/// Basis vectors v2, v3 pure and 2 v4 - Tr(v4) pure, on top of ring closure
/// (which the order constructor already enforces).
bool normalized_check(const EichlerOrder& O);

/// O' = Z + 2O with basis {1, 2v2, 2v3, 2v4 - Tr(v4)}.
class PrimeSuborder {
public:
    explicit PrimeSuborder(const EichlerOrder& parent);

    const EichlerOrder& parent() const { return parent_; }
    const std::array<Quaternion, 4>& basis() const { return basis_; }

    /// x*B'[1] + y*B'[2] + z*B'[3].
    Quaternion pure_element(const Rational& x, const Rational& y, const Rational& z) const;

private:
    EichlerOrder parent_;
    std::array<Quaternion, 4> basis_;
};

PrimeSuborder prime_suborder(const EichlerOrder& O);

/// N_{O',3}(x, y, z) = Nm(x*2v2 + y*2v3 + z*(2v4 - Tr v4)).
QuadForm ternary_normic_form(const PrimeSuborder& Op);
/// N_{O',4} on the full basis B'.
QuadForm quaternary_normic_form(const PrimeSuborder& Op);

/// O_{K,m} in K = Q(sqrt d).
struct QuadraticOrder {
    Integer d;
    Integer m;
    Integer field_discriminant;  // D_K
    Integer discriminant;        // m^2 D_K

    bool d_is_one_mod_four() const;
};

QuadraticOrder quadratic_order(const Integer& d, const Integer& m);

}  // namespace pcm
