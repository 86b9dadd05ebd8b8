#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

// Parsing and printing. Rationals print as "n" or "n/d" in lowest terms.
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Builds n/d in lowest terms; throws std::invalid_argument when d == 0.
Rational make_rational(const Integer& n, const Integer& d);

bool is_integral(const Rational& q);

/// Deterministic primality for |n| < 2^64. Larger inputs are rejected.
bool is_prime(const Integer& n);

/// Prime factorization of |n| (n != 0, |n| < 2^64) as (prime, exponent) pairs
/// in increasing prime order.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// Distinct prime divisors of |n|.
std::vector<Integer> prime_divisors(const Integer& n);

bool is_squarefree(const Integer& n);

/// v_ell(x). Returns kInfiniteValuation for x == 0.
long valuation(const Integer& x, const Integer& ell);
long valuation(const Rational& x, const Integer& ell);

/// Legendre symbol (a/ell) for an odd prime ell.
int legendre(const Integer& a, const Integer& ell);

/// Kronecker symbol (a/n), any n. Used for the ell = 2 entries of the local
/// embedding tables.
int kronecker(const Integer& a, const Integer& n);

/// Smallest positive integer that is a quadratic non-residue mod the odd prime p.
Integer smallest_nonresidue(const Integer& p);

/// A place of Q: a finite prime or the archimedean place.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place finite(Integer prime);

    bool is_infinite() const { return infinite_; }
    const Integer& prime() const;
    std::string to_string() const;

private:
    Place() = default;
    bool infinite_ = true;
    Integer prime_;
};

/// Local Hilbert symbol (a, b)_v in {-1, 1}. Throws on a == 0 or b == 0.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/// Primes at which (a, b)_ell could be -1: those dividing 2ab (numerators and
/// denominators). The archimedean place is not included.
std::vector<Integer> hilbert_bad_primes(const Rational& a, const Rational& b);

struct SquarefreeDecomposition {
    Integer squarefree;  // s, carries the sign of n
    Integer factor;      // f >= 1, n = s * f^2
};

SquarefreeDecomposition squarefree_decompose(const Integer& n);

/// Element of Z[1/p] stored canonically as unit * p^exponent with unit an
/// integer coprime to p (or unit == 0 for zero, exponent 0).
class ZInvP {
public:
    ZInvP(const Rational& value, const Integer& p);
    static ZInvP from_parts(Integer unit, long exponent, const Integer& p);

    const Integer& p() const { return p_; }
    const Integer& unit() const { return unit_; }
    long exponent() const { return exponent_; }
    bool is_zero() const { return unit_ == 0; }
    /// Units of Z[1/p] are exactly +-p^k.
    bool is_unit() const { return abs(unit_) == 1; }
    Rational value() const;

    friend ZInvP operator+(const ZInvP& a, const ZInvP& b);
    friend ZInvP operator-(const ZInvP& a, const ZInvP& b);
    friend ZInvP operator*(const ZInvP& a, const ZInvP& b);
    ZInvP operator-() const;
    friend bool operator==(const ZInvP& a, const ZInvP& b);

private:
    ZInvP() = default;
    Integer p_;
    Integer unit_;
    long exponent_ = 0;
};

/// Generator of the Z[1/p]-ideal spanned by the values, normalized to a
/// positive integer coprime to p (0 when all values vanish).
Integer zinvp_ideal_generator(const std::vector<ZInvP>& values);

/// Integer square root floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// Exact rational square root when q is a square in Q; false otherwise.
bool rational_sqrt(const Rational& q, Rational& root);

/// x^k for small non-negative k.
Integer ipow(const Integer& x, unsigned long k);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

}  // namespace pcm
