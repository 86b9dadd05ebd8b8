#pragma once

#include "pcm/padic.hpp"
#include "pcm/quaternion.hpp"

#include <string>
#include <vector>

namespace pcm {

/// f(X, Y) = A X^2 + B XY + C Y^2 over Q_p.
struct BinaryFormP {
    PAdic A, B, C;

    /// B^2 - 4AC.
    PAdic discriminant() const { return B * B - (A * C).times(4); }
    /// AC - B^2/4, the determinant of the Gram matrix.
    PAdic determinant() const;
    /// f(z, 1).
    QuadExt evaluate(const QuadExt& z) const;
};

bool form_equal(const BinaryFormP& f, const BinaryFormP& g);

enum class TransformClass { Scalar, Parabolic, Hyperbolic, EllipticUnramified, EllipticRamified };

std::string to_string(TransformClass c);

/// f_gamma = [c, d - a, -b].
BinaryFormP form_from_matrix(const Matrix2P& g);

/// Throws PrecisionError when the discriminant cannot be told apart from 0
/// for a non-scalar matrix; throws std::invalid_argument for singular input.
TransformClass classify(const Matrix2P& g);

/// A fixed point on P^1(Q_{p^2}); infinite when the point is the cusp.
struct FixedPoint {
    bool infinite = false;
    QuadExt z;
};

/// Fixed points of a non-scalar matrix. The first root uses the canonical
/// square root of the discriminant. Parabolic input yields one point.
/// EllipticRamified input throws std::invalid_argument.
std::vector<FixedPoint> fixed_points(const Matrix2P& g);

}  // namespace pcm
