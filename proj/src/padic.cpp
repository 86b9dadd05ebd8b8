#include "pcm/padic.hpp"

#include <algorithm>

namespace pcm {

namespace {

Integer mod_pow_p(const Integer& p, long k) { return ipow(p, static_cast<unsigned long>(k)); }

Integer mod_positive(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::logic_error("non-invertible unit in p-adic arithmetic");
    }
    return r;
}

long clamp_precision(long v) { return std::min(v, kExactPrecision); }

// Square root of a quadratic residue a mod the odd prime p (Tonelli-Shanks).
Integer sqrt_mod_prime(const Integer& a_in, const Integer& p) {
    Integer a = mod_positive(a_in, p);
    if (a == 0) return 0;
    Integer q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;
    Integer z = 2;
    while (legendre(z, p) != -1) ++z;
    Integer m = s, c, t, r;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Integer e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m.get_ui(); ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

const char* kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(long e) {
    std::string digits = std::to_string(e < 0 ? -e : e);
    std::string out = e < 0 ? "⁻" : "";
    for (char ch : digits) out += kSuperscripts[ch - '0'];
    return out;
}

std::string power_text(const Integer& p, long e) {
    if (e == 1) return to_string(p);
    return to_string(p) + superscript(e);
}

}  // namespace

// Value p^val * raw known modulo p^(val + prec).
static PAdic normalized(const Integer& p, long val, const Integer& raw, long prec) {
    if (prec <= 0) return PAdic::zero(p, val + std::max(prec, 0L));
    Integer modulus = mod_pow_p(p, prec);
    Integer u = mod_positive(raw, modulus);
    if (u == 0) return PAdic::zero(p, clamp_precision(val + prec));
    long v = valuation(u, p);
    if (v > 0) {
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), mod_pow_p(p, v).get_mpz_t());
    }
    return PAdic::from_parts(p, val + v, u, prec - v);
}

PAdic PAdic::from_rational(const Rational& q, const Integer& p, long precision) {
    if (precision < 1) throw std::invalid_argument("p-adic precision must be positive");
    if (q == 0) return zero(p);
    Integer num = q.get_num(), den = q.get_den();
    long v = static_cast<long>(mpz_remove(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t())) -
             static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    Integer modulus = mod_pow_p(p, precision);
    PAdic out;
    out.p_ = p;
    out.val_ = v;
    out.unit_ = mod_positive(num * mod_inverse(den, modulus), modulus);
    out.prec_ = precision;
    return out;
}

PAdic PAdic::from_parts(const Integer& p, long val, const Integer& unit, long prec) {
    if (prec <= 0) return zero(p, val);
    if (mpz_divisible_p(unit.get_mpz_t(), p.get_mpz_t())) return normalized(p, val, unit, prec);
    PAdic out;
    out.p_ = p;
    out.val_ = val;
    out.unit_ = mod_positive(unit, mod_pow_p(p, prec));
    out.prec_ = prec;
    return out;
}

PAdic PAdic::zero(const Integer& p, long absolute_precision) {
    PAdic out;
    out.p_ = p;
    out.val_ = clamp_precision(absolute_precision);
    out.unit_ = 0;
    out.prec_ = 0;
    return out;
}

PAdic PAdic::operator-() const {
    if (is_zero()) return *this;
    PAdic out = *this;
    out.unit_ = mod_pow_p(p_, prec_) - unit_;
    return out;
}

PAdic PAdic::inverse() const {
    if (is_zero()) throw PrecisionError("inverse of a p-adic value indistinguishable from zero");
    PAdic out = *this;
    out.val_ = -val_;
    out.unit_ = mod_inverse(unit_, mod_pow_p(p_, prec_));
    return out;
}

PAdic PAdic::times(const Integer& n) const {
    if (n == 0) return zero(p_);
    if (is_zero()) return zero(p_, clamp_precision(val_ + pcm::valuation(n, p_)));
    Integer m = n;
    long v = static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p_.get_mpz_t()));
    PAdic out = *this;
    out.val_ = val_ + v;
    out.unit_ = mod_positive(unit_ * m, mod_pow_p(p_, prec_));
    return out;
}

PAdic PAdic::with_relative_precision(long prec) const {
    if (is_zero() || prec >= prec_) return *this;
    return from_parts(p_, val_, unit_, prec);
}

PAdic operator+(const PAdic& a, const PAdic& b) {
    long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
    if (a.is_zero() && b.is_zero()) return PAdic::zero(a.p_, abs_prec);
    long m;
    if (a.is_zero()) {
        m = b.val_;
    } else if (b.is_zero()) {
        m = a.val_;
    } else {
        m = std::min(a.val_, b.val_);
    }
    if (m >= abs_prec) return PAdic::zero(a.p_, abs_prec);
    Integer sum = 0;
    if (!a.is_zero()) sum += a.unit_ * mod_pow_p(a.p_, a.val_ - m);
    if (!b.is_zero()) sum += b.unit_ * mod_pow_p(b.p_, b.val_ - m);
    return normalized(a.p_, m, sum, abs_prec - m);
}

PAdic operator-(const PAdic& a, const PAdic& b) { return a + (-b); }

PAdic operator*(const PAdic& a, const PAdic& b) {
    if (a.is_zero() || b.is_zero()) return PAdic::zero(a.p_, clamp_precision(a.val_ + b.val_));
    long prec = std::min(a.prec_, b.prec_);
    PAdic out;
    out.p_ = a.p_;
    out.val_ = a.val_ + b.val_;
    out.prec_ = prec;
    out.unit_ = (a.unit_ * b.unit_) % mod_pow_p(a.p_, prec);
    return out;
}

PAdic operator/(const PAdic& a, const PAdic& b) { return a * b.inverse(); }

std::vector<Integer> PAdic::unit_digits() const {
    std::vector<Integer> out;
    Integer u = unit_;
    for (long i = 0; i < prec_; ++i) {
        Integer d;
        mpz_fdiv_qr(u.get_mpz_t(), d.get_mpz_t(), u.get_mpz_t(), p_.get_mpz_t());
        out.push_back(d);
    }
    return out;
}

Rational PAdic::truncated_value() const {
    if (is_zero()) return 0;
    Rational v(unit_);
    if (val_ >= 0) {
        v *= mod_pow_p(p_, val_);
    } else {
        v /= mod_pow_p(p_, -val_);
    }
    return v;
}

std::string PAdic::render() const {
    if (is_zero()) {
        if (val_ >= kExactPrecision) return "0";
        return "O(" + power_text(p_, val_) + ")";
    }
    std::string out;
    auto digits = unit_digits();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] == 0) continue;
        long e = val_ + static_cast<long>(i);
        if (!out.empty()) out += " + ";
        out += to_string(digits[i]);
        if (e != 0) out += "·" + power_text(p_, e);
    }
    if (absolute_precision() < kExactPrecision) out += " + O(" + power_text(p_, absolute_precision()) + ")";
    return out;
}

bool padic_equal(const PAdic& a, const PAdic& b) {
    PAdic d = a - b;
    if (!d.is_zero()) return false;
    if (a.is_zero() && b.is_zero()) return true;
    long scale = a.is_zero() ? b.valuation()
                 : b.is_zero() ? a.valuation()
                               : std::min(a.valuation(), b.valuation());
    if (d.absolute_precision() <= scale) {
        throw PrecisionError("comparison below one significant digit");
    }
    return true;
}

bool is_square(const PAdic& x) {
    if (x.p() == 2) throw std::invalid_argument("p = 2 is not supported");
    if (x.is_zero()) throw std::invalid_argument("square test of zero");
    if (x.valuation() % 2 != 0) return false;
    return legendre(x.unit(), x.p()) == 1;
}

PAdic hensel_sqrt(const PAdic& x) {
    if (!is_square(x)) throw std::invalid_argument("hensel_sqrt of a non-square: " + x.render());
    const Integer& p = x.p();
    long prec = x.relative_precision();
    Integer r = sqrt_mod_prime(x.unit(), p);
    long known = 1;
    while (known < prec) {
        known = std::min(2 * known, prec);
        Integer modulus = mod_pow_p(p, known);
        Integer f = (r * r - x.unit()) % modulus;
        r = mod_positive(r - f * mod_inverse(2 * r, modulus), modulus);
    }
    Integer half = (p - 1) / 2;
    if (mod_positive(r, p) > half) r = mod_pow_p(p, prec) - r;
    return PAdic::from_parts(p, x.valuation() / 2, r, prec);
}

QuadExt::QuadExt(PAdic x, PAdic y, Integer eps) : x_(std::move(x)), y_(std::move(y)), eps_(std::move(eps)) {
    if (x_.p() != y_.p()) throw std::invalid_argument("components over different primes");
}

QuadExt QuadExt::from_base(const PAdic& x, const Integer& eps) { return QuadExt(x, PAdic::zero(x.p()), eps); }

QuadExt QuadExt::from_rational(const Rational& q, const Integer& p, const Integer& eps, long precision) {
    return from_base(PAdic::from_rational(q, p, precision), eps);
}

long QuadExt::valuation() const {
    if (x_.is_zero()) return y_.valuation();
    if (y_.is_zero()) return x_.valuation();
    return std::min(x_.valuation(), y_.valuation());
}

long QuadExt::absolute_precision() const { return std::min(x_.absolute_precision(), y_.absolute_precision()); }

QuadExt QuadExt::operator-() const { return QuadExt(-x_, -y_, eps_); }

PAdic QuadExt::norm() const {
    return x_ * x_ - (y_ * y_).times(eps_);
}

QuadExt QuadExt::inverse() const {
    PAdic n = norm();
    if (n.is_zero()) throw PrecisionError("inverse of a Q_{p^2} value indistinguishable from zero");
    PAdic ninv = n.inverse();
    return QuadExt(x_ * ninv, -(y_ * ninv), eps_);
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) { return QuadExt(a.x_ + b.x_, a.y_ + b.y_, a.eps_); }
QuadExt operator-(const QuadExt& a, const QuadExt& b) { return QuadExt(a.x_ - b.x_, a.y_ - b.y_, a.eps_); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.x_ * b.x_ + (a.y_ * b.y_).times(a.eps_), a.x_ * b.y_ + a.y_ * b.x_, a.eps_);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

std::string QuadExt::render() const {
    if (y_.is_zero()) return x_.render();
    return "(" + x_.render() + ") + (" + y_.render() + ")·√" + to_string(eps_);
}

bool quadext_equal(const QuadExt& a, const QuadExt& b) {
    return padic_equal(a.x(), b.x()) && padic_equal(a.y(), b.y());
}

QuadExt galois_conj(const QuadExt& z) { return QuadExt(z.x(), -z.y(), z.eps()); }

QuadExt sqrt_in_quadext(const PAdic& d, const Integer& eps) {
    if (d.is_zero()) throw std::invalid_argument("square root of zero requested in Q_{p^2}");
    if (d.valuation() % 2 != 0) {
        throw std::invalid_argument("ramified: " + d.render() + " has odd valuation");
    }
    if (is_square(d)) throw std::invalid_argument(d.render() + " is a square in Q_p; use hensel_sqrt");
    PAdic e = PAdic::from_rational(Rational(eps), d.p(), d.relative_precision());
    PAdic s = hensel_sqrt(d / e);
    return QuadExt(PAdic::zero(d.p()), s, eps);
}

QuadExt sqrt_in_quadext(const Integer& d, const Integer& p, long precision) {
    return sqrt_in_quadext(PAdic::from_rational(Rational(d), p, precision), canonical_eps(p));
}

QuadExt sqrt_unramified(const PAdic& d, const Integer& eps) {
    if (is_square(d)) return QuadExt::from_base(hensel_sqrt(d), eps);
    return sqrt_in_quadext(d, eps);
}

Integer canonical_eps(const Integer& p) {
    if (p == 2) throw std::invalid_argument("p = 2 is not supported");
    return smallest_nonresidue(p);
}

}  // namespace pcm
