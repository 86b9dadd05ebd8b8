#include "pcm/quaternion.hpp"

#include <stdexcept>

namespace pcm {

QuaternionAlgebra::QuaternionAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == 0 || b_ == 0) throw std::invalid_argument("quaternion algebra needs a != 0 and b != 0");
}

Quaternion operator+(const Quaternion& u, const Quaternion& v) {
    return {u.x + v.x, u.y + v.y, u.z + v.z, u.t + v.t};
}

Quaternion operator-(const Quaternion& u, const Quaternion& v) {
    return {u.x - v.x, u.y - v.y, u.z - v.z, u.t - v.t};
}

Quaternion Quaternion::operator-() const { return {-x, -y, -z, -t}; }

Quaternion operator*(const Rational& s, const Quaternion& q) { return {s * q.x, s * q.y, s * q.z, s * q.t}; }

Quaternion multiply(const QuaternionAlgebra& A, const Quaternion& u, const Quaternion& v) {
    const Rational& a = A.a();
    const Rational& b = A.b();
    Rational ab = a * b;
    return {
        u.x * v.x + a * u.y * v.y + b * u.z * v.z - ab * u.t * v.t,
        u.x * v.y + u.y * v.x - b * u.z * v.t + b * u.t * v.z,
        u.x * v.z + u.z * v.x + a * u.y * v.t - a * u.t * v.y,
        u.x * v.t + u.t * v.x + u.y * v.z - u.z * v.y,
    };
}

Rational norm(const QuaternionAlgebra& A, const Quaternion& q) {
    return q.x * q.x - A.a() * q.y * q.y - A.b() * q.z * q.z + A.a() * A.b() * q.t * q.t;
}

Rational trace(const Quaternion& q) { return 2 * q.x; }

Quaternion conj(const Quaternion& q) { return {q.x, -q.y, -q.z, -q.t}; }

Quaternion inverse(const QuaternionAlgebra& A, const Quaternion& q) {
    Rational n = norm(A, q);
    if (n == 0) throw std::invalid_argument("quaternion of norm zero has no inverse");
    Rational s = 1 / n;
    return s * conj(q);
}

std::string to_string(const Quaternion& q) {
    return "[" + to_string(q.x) + ", " + to_string(q.y) + ", " + to_string(q.z) + ", " + to_string(q.t) + "]";
}

Ramification ramification(const QuaternionAlgebra& A) {
    Ramification r;
    r.discriminant = 1;
    for (const Integer& ell : hilbert_bad_primes(A.a(), A.b())) {
        if (hilbert_symbol(A.a(), A.b(), Place::finite(ell)) == -1) {
            r.primes.push_back(ell);
            r.discriminant *= ell;
        }
    }
    r.definite = hilbert_symbol(A.a(), A.b(), Place::infinity()) == -1;
    return r;
}

Matrix2P Matrix2P::identity(const Integer& p, long precision) {
    PAdic one = PAdic::from_rational(1, p, precision);
    PAdic zero = PAdic::zero(p);
    return {one, zero, zero, one};
}

Matrix2P Matrix2P::from_rationals(const std::array<Rational, 4>& e, const Integer& p, long precision) {
    return {PAdic::from_rational(e[0], p, precision), PAdic::from_rational(e[1], p, precision),
            PAdic::from_rational(e[2], p, precision), PAdic::from_rational(e[3], p, precision)};
}

QuadExt Matrix2P::act(const QuadExt& z) const {
    const Integer& eps = z.eps();
    QuadExt num = QuadExt(a * z.x() + b, a * z.y(), eps);
    QuadExt den = QuadExt(c * z.x() + d, c * z.y(), eps);
    if (den.is_zero()) throw PrecisionError("Moebius denominator vanishes at working precision");
    return num / den;
}

Matrix2P operator*(const Matrix2P& u, const Matrix2P& v) {
    return {u.a * v.a + u.b * v.c, u.a * v.b + u.b * v.d, u.c * v.a + u.d * v.c, u.c * v.b + u.d * v.d};
}

Matrix2P operator+(const Matrix2P& u, const Matrix2P& v) { return {u.a + v.a, u.b + v.b, u.c + v.c, u.d + v.d}; }

bool matrix_equal(const Matrix2P& u, const Matrix2P& v) {
    return padic_equal(u.a, v.a) && padic_equal(u.b, v.b) && padic_equal(u.c, v.c) && padic_equal(u.d, v.d);
}

MatrixImmersion::MatrixImmersion(QuaternionAlgebra algebra, Integer p, long precision)
    : algebra_(std::move(algebra)),
      p_(std::move(p)),
      precision_(precision),
      sqrt_a_(PAdic::zero(p_)),
      b_(PAdic::zero(p_)) {
    if (p_ == 2) throw std::invalid_argument("p = 2 is not supported");
    if (!is_prime(p_)) throw std::invalid_argument("p = " + to_string(p_) + " is not prime");
    const Rational& a = algebra_.a();
    if (valuation(a, p_) != 0 || legendre(a.get_num() * a.get_den(), p_) != 1) {
        throw std::invalid_argument("a = " + to_string(a) + " is not a nonzero square residue mod " + to_string(p_) +
                                    "; choose another presentation");
    }
    sqrt_a_ = hensel_sqrt(PAdic::from_rational(a, p_, precision_));
    b_ = PAdic::from_rational(algebra_.b(), p_, precision_);
}

Matrix2P MatrixImmersion::operator()(const Quaternion& q) const {
    auto lift = [&](const Rational& r) {
        return r == 0 ? PAdic::zero(p_) : PAdic::from_rational(r, p_, precision_);
    };
    PAdic x = lift(q.x), y = lift(q.y), z = lift(q.z), t = lift(q.t);
    PAdic ys = y * sqrt_a_, ts = t * sqrt_a_;
    return {x + ys, z + ts, b_ * (z - ts), x - ys};
}

MatrixImmersion phi_p(const QuaternionAlgebra& A, const Integer& p, long precision) {
    return MatrixImmersion(A, p, precision);
}

std::optional<PresentationHint> suggest_presentation(const QuaternionAlgebra& A, const Integer& p, int bound) {
    for (int s = 1; s <= 3 * bound; ++s) {
        for (int y = -bound; y <= bound; ++y) {
            for (int z = -bound; z <= bound; ++z) {
                int t = s - std::abs(y) - std::abs(z);
                if (t < 0 || t > bound) continue;
                for (int sign : {1, -1}) {
                    if (t == 0 && sign == -1) continue;
                    Quaternion u{0, y, z, sign * t};
                    Rational sq = -norm(A, u);
                    if (sq == 0 || valuation(sq, p) != 0) continue;
                    if (legendre(sq.get_num() * sq.get_den(), p) == 1) return PresentationHint{u, sq};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace pcm
