#include "pcm/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcm {

PAdic BinaryFormP::determinant() const {
    PAdic four_det = (A * C).times(4) - B * B;
    if (four_det.is_zero()) return four_det;
    PAdic quarter = PAdic::from_rational(Rational(1, 4), four_det.p(), four_det.relative_precision());
    return four_det * quarter;
}

QuadExt BinaryFormP::evaluate(const QuadExt& z) const {
    const Integer& eps = z.eps();
    QuadExt a = QuadExt::from_base(A, eps), b = QuadExt::from_base(B, eps), c = QuadExt::from_base(C, eps);
    return (a * z + b) * z + c;
}

bool form_equal(const BinaryFormP& f, const BinaryFormP& g) {
    return padic_equal(f.A, g.A) && padic_equal(f.B, g.B) && padic_equal(f.C, g.C);
}

std::string to_string(TransformClass c) {
    switch (c) {
        case TransformClass::Scalar: return "scalar";
        case TransformClass::Parabolic: return "parabolic";
        case TransformClass::Hyperbolic: return "hyperbolic";
        case TransformClass::EllipticUnramified: return "elliptic-unramified";
        case TransformClass::EllipticRamified: return "elliptic-ramified";
    }
    return "unknown";
}

BinaryFormP form_from_matrix(const Matrix2P& g) { return {g.c, g.d - g.a, -g.b}; }

TransformClass classify(const Matrix2P& g) {
    PAdic det = g.det();
    if (det.is_zero()) throw std::invalid_argument("matrix is singular at working precision");
    if (g.b.is_zero() && g.c.is_zero() && (g.a - g.d).is_zero()) return TransformClass::Scalar;
    PAdic tr = g.trace();
    PAdic tr2 = tr * tr, four_det = det.times(4);
    // padic_equal throws when not one significant digit of Tr^2 - 4 Det is known.
    if (padic_equal(tr2, four_det)) return TransformClass::Parabolic;
    PAdic disc = tr2 - four_det;
    if (disc.valuation() % 2 != 0) return TransformClass::EllipticRamified;
    return is_square(disc) ? TransformClass::Hyperbolic : TransformClass::EllipticUnramified;
}

std::vector<FixedPoint> fixed_points(const Matrix2P& g) {
    TransformClass cls = classify(g);
    const Integer& p = g.p();
    const Integer eps = canonical_eps(p);
    switch (cls) {
        case TransformClass::Scalar: throw std::invalid_argument("scalar matrices fix every point");
        case TransformClass::EllipticRamified:
            throw std::invalid_argument("fixed points lie in a ramified quadratic extension, outside Q_{p^2}");
        default: break;
    }
    PAdic diff = g.a - g.d;
    if (g.c.is_zero()) {
        std::vector<FixedPoint> out{FixedPoint{true, QuadExt::from_base(PAdic::zero(p), eps)}};
        if (cls != TransformClass::Parabolic) {
            // c = 0: (d - a) z = b.
            out.push_back(FixedPoint{false, QuadExt::from_base(g.b / (-diff), eps)});
        }
        return out;
    }
    PAdic two_c = g.c.times(2);
    if (cls == TransformClass::Parabolic) {
        return {FixedPoint{false, QuadExt::from_base(diff / two_c, eps)}};
    }
    PAdic disc = form_from_matrix(g).discriminant();
    QuadExt root = cls == TransformClass::Hyperbolic ? QuadExt::from_base(hensel_sqrt(disc), eps)
                                                     : sqrt_in_quadext(disc, eps);
    QuadExt base = QuadExt::from_base(diff, eps);
    QuadExt inv = QuadExt::from_base(two_c.inverse(), eps);
    return {FixedPoint{false, (base + root) * inv}, FixedPoint{false, (base - root) * inv}};
}

}  // namespace pcm
