#pragma once

#include "pcm/arith.hpp"
#include "pcm/padic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pcm {

/// Presentation (a, b / Q): i^2 = a, j^2 = b, k = ij = -ji.
class QuaternionAlgebra {
public:
    QuaternionAlgebra(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    bool is_definite() const { return a_ < 0 && b_ < 0; }

private:
    Rational a_;
    Rational b_;
};

/// x + y i + z j + t k.
struct Quaternion {
    Rational x, y, z, t;

    static Quaternion scalar(const Rational& s) { return {s, 0, 0, 0}; }
    bool is_pure() const { return x == 0; }
    bool is_zero() const { return x == 0 && y == 0 && z == 0 && t == 0; }
    std::array<Rational, 4> coords() const { return {x, y, z, t}; }

    friend bool operator==(const Quaternion&, const Quaternion&) = default;
    friend Quaternion operator+(const Quaternion& u, const Quaternion& v);
    friend Quaternion operator-(const Quaternion& u, const Quaternion& v);
    Quaternion operator-() const;
    friend Quaternion operator*(const Rational& s, const Quaternion& q);
};

Quaternion multiply(const QuaternionAlgebra& A, const Quaternion& u, const Quaternion& v);
Rational norm(const QuaternionAlgebra& A, const Quaternion& q);
Rational trace(const Quaternion& q);
Quaternion conj(const Quaternion& q);
/// q^{-1} = conj(q) / Nm(q); throws on norm zero.
Quaternion inverse(const QuaternionAlgebra& A, const Quaternion& q);
std::string to_string(const Quaternion& q);

struct Ramification {
    Integer discriminant;           // product of the finite ramified primes
    std::vector<Integer> primes;    // increasing
    bool definite = false;          // ramified at infinity
};

Ramification ramification(const QuaternionAlgebra& A);

/// 2x2 matrix over Q_p, row-major [[a, b], [c, d]].
struct Matrix2P {
    PAdic a, b, c, d;

    static Matrix2P identity(const Integer& p, long precision = kDefaultPrecision);
    static Matrix2P from_rationals(const std::array<Rational, 4>& entries, const Integer& p, long precision);

    const Integer& p() const { return a.p(); }
    PAdic det() const { return a * d - b * c; }
    PAdic trace() const { return a + d; }
    Matrix2P scaled(const PAdic& s) const { return {s * a, s * b, s * c, s * d}; }

    /// Moebius action (a z + b) / (c z + d). Throws PrecisionError when the
    /// denominator vanishes at working precision.
    QuadExt act(const QuadExt& z) const;

    friend Matrix2P operator*(const Matrix2P& u, const Matrix2P& v);
    friend Matrix2P operator+(const Matrix2P& u, const Matrix2P& v);
};

bool matrix_equal(const Matrix2P& u, const Matrix2P& v);

/// The immersion x + yi + zj + tk -> [[x + y s, z + t s], [b (z - t s), x - y s]]
/// into M_2(Q_p), s = sqrt(a) in Q_p.
class MatrixImmersion {
public:
    MatrixImmersion(QuaternionAlgebra algebra, Integer p, long precision);

    const QuaternionAlgebra& algebra() const { return algebra_; }
    const Integer& p() const { return p_; }
    long precision() const { return precision_; }
    const PAdic& sqrt_a() const { return sqrt_a_; }

    Matrix2P operator()(const Quaternion& q) const;

private:
    QuaternionAlgebra algebra_;
    Integer p_;
    long precision_;
    PAdic sqrt_a_;
    PAdic b_;
};

/// Requires (a/p) = 1 and p odd; otherwise throws std::invalid_argument.
MatrixImmersion phi_p(const QuaternionAlgebra& A, const Integer& p, long precision = kDefaultPrecision);

/// A pure quaternion u with u^2 = -Nm(u) a nonzero residue mod p, usable as the
/// first generator of an equivalent presentation. Searches coordinates in
/// [-bound, bound].
struct PresentationHint {
    Quaternion generator;
    Rational square;
};
std::optional<PresentationHint> suggest_presentation(const QuaternionAlgebra& A, const Integer& p, int bound = 3);

}  // namespace pcm
