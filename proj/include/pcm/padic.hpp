#pragma once

#include "pcm/arith.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pcm {

/// Raised when a p-adic computation cannot be decided at the available
/// precision (an unknown residue, or an equality test with no digits left).
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultPrecision = 32;

/// Absolute precision carried by exact zeros.
inline constexpr long kExactPrecision = 1L << 40;

/// Element of Q_p with a finite number of known digits.
///
/// A nonzero value is p^val * unit with unit coprime to p and known modulo
/// p^prec (relative precision). A value whose known digits all vanish is the
/// zero sentinel: it is only known to be 0 mod p^val (absolute precision val).
/// Every operation propagates precision; nothing is ever padded with guessed
/// digits.
class PAdic {
public:
    static PAdic from_rational(const Rational& q, const Integer& p, long precision = kDefaultPrecision);
    static PAdic from_parts(const Integer& p, long val, const Integer& unit, long prec);
    static PAdic zero(const Integer& p, long absolute_precision = kExactPrecision);

    const Integer& p() const { return p_; }
    bool is_zero() const { return prec_ == 0; }
    /// Valuation of a nonzero value; the absolute precision for the zero sentinel.
    long valuation() const { return val_; }
    long relative_precision() const { return prec_; }
    long absolute_precision() const { return is_zero() ? val_ : val_ + prec_; }
    const Integer& unit() const { return unit_; }

    /// True when the value is known to be 0 mod p^digits.
    bool is_zero_to(long digits) const { return val_ >= digits; }

    PAdic operator-() const;
    PAdic inverse() const;
    PAdic with_relative_precision(long prec) const;
    /// Product with an exact integer (no precision loss beyond v_p(n)).
    PAdic times(const Integer& n) const;

    friend PAdic operator+(const PAdic& a, const PAdic& b);
    friend PAdic operator-(const PAdic& a, const PAdic& b);
    friend PAdic operator*(const PAdic& a, const PAdic& b);
    friend PAdic operator/(const PAdic& a, const PAdic& b);

    /// Base-p digits of the unit, least significant first (prec entries).
    std::vector<Integer> unit_digits() const;

    /// Truncated value p^val * unit as a rational (0 for the zero sentinel).
    Rational truncated_value() const;

    /// "a0 + a1·p + a2·p² + O(p^N)".
    std::string render() const;

private:
    PAdic() = default;
    Integer p_;
    long val_ = 0;
    Integer unit_;
    long prec_ = 0;
};

/// Equality at the shared precision. Throws PrecisionError when the two values
/// do not share at least one significant digit.
bool padic_equal(const PAdic& a, const PAdic& b);

/// Square test in Q_p for odd p.
bool is_square(const PAdic& x);

/// Square root of a square in Q_p; the root whose unit is in {1..(p-1)/2} mod p.
PAdic hensel_sqrt(const PAdic& x);

/// Element x + y·sqrt(eps) of the unramified quadratic extension Q_{p^2},
/// eps the smallest positive non-residue mod p.
class QuadExt {
public:
    QuadExt(PAdic x, PAdic y, Integer eps);
    static QuadExt from_base(const PAdic& x, const Integer& eps);
    static QuadExt from_rational(const Rational& q, const Integer& p, const Integer& eps,
                                 long precision = kDefaultPrecision);

    const PAdic& x() const { return x_; }
    const PAdic& y() const { return y_; }
    const Integer& eps() const { return eps_; }
    const Integer& p() const { return x_.p(); }

    /// In Q_p (y indistinguishable from 0).
    bool in_base() const { return y_.is_zero(); }
    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    long valuation() const;
    long absolute_precision() const;

    QuadExt operator-() const;
    QuadExt inverse() const;
    /// x^2 - eps*y^2.
    PAdic norm() const;

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

    std::string render() const;

private:
    PAdic x_;
    PAdic y_;
    Integer eps_;
};

bool quadext_equal(const QuadExt& a, const QuadExt& b);

/// x + y·sqrt(eps) -> x - y·sqrt(eps).
QuadExt galois_conj(const QuadExt& z);

/// sqrt(d) for d a non-square unit class of even valuation, as s·sqrt(eps).
QuadExt sqrt_in_quadext(const PAdic& d, const Integer& eps);
QuadExt sqrt_in_quadext(const Integer& d, const Integer& p, long precision = kDefaultPrecision);

/// sqrt(d) in Q_{p^2} for any d of even valuation: a Q_p root when d is a
/// square, otherwise sqrt_in_quadext. Throws for odd valuation (ramified).
QuadExt sqrt_unramified(const PAdic& d, const Integer& eps);

/// Smallest positive non-residue mod p; p odd.
Integer canonical_eps(const Integer& p);

}  // namespace pcm
