#include "pcm/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pcm {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool fits_u64(const Integer& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

u64 to_u64(const Integer& n) {
    u64 out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

Integer from_u64(u64 v) {
    Integer out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        const u64 m = 128;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    for (u64 q = 2; q < 1000 && q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            factor_rec(n / q, out);
            return;
        }
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

// Square class representative: integer with the same class as q in Q*/Q*^2.
Integer square_class_integer(const Rational& q) { return q.get_num() * q.get_den(); }

}  // namespace

Integer parse_integer(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Rational make_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_prime(const Integer& n) {
    if (sgn(n) <= 0) return false;
    if (!fits_u64(n)) throw std::invalid_argument("primality test limited to integers below 2^64");
    return miller_rabin(to_u64(n));
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n == 0) throw std::invalid_argument("cannot factor zero");
    Integer a = abs(n);
    if (!fits_u64(a)) throw std::invalid_argument("factorization limited to integers below 2^64");
    std::vector<u64> primes;
    factor_rec(to_u64(a), primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, unsigned>> out;
    for (u64 q : primes) {
        if (!out.empty() && out.back().first == from_u64(q)) {
            ++out.back().second;
        } else {
            out.emplace_back(from_u64(q), 1u);
        }
    }
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (auto& [q, e] : factorize(n)) out.push_back(q);
    return out;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (auto& [q, e] : factorize(n)) {
        if (e > 1) return false;
    }
    return true;
}

long valuation(const Integer& x, const Integer& ell) {
    if (x == 0) return kInfiniteValuation;
    if (ell < 2) throw std::invalid_argument("valuation needs a prime");
    Integer r = x;
    return static_cast<long>(mpz_remove(r.get_mpz_t(), x.get_mpz_t(), ell.get_mpz_t()));
}

long valuation(const Rational& x, const Integer& ell) {
    if (x == 0) return kInfiniteValuation;
    return valuation(x.get_num(), ell) - valuation(x.get_den(), ell);
}

int legendre(const Integer& a, const Integer& ell) {
    if (ell == 2 || !is_prime(ell)) {
        throw std::invalid_argument("legendre symbol needs an odd prime, got " + to_string(ell));
    }
    return mpz_legendre(Integer(((a % ell) + ell) % ell).get_mpz_t(), ell.get_mpz_t());
}

int kronecker(const Integer& a, const Integer& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

Integer smallest_nonresidue(const Integer& p) {
    for (Integer e = 2;; ++e) {
        if (legendre(e, p) == -1) return e;
    }
}

Place Place::finite(Integer prime) {
    if (!is_prime(prime)) throw std::invalid_argument("place must be a prime, got " + pcm::to_string(prime));
    Place out;
    out.infinite_ = false;
    out.prime_ = std::move(prime);
    return out;
}

const Integer& Place::prime() const {
    if (infinite_) throw std::logic_error("archimedean place has no prime");
    return prime_;
}

std::string Place::to_string() const { return infinite_ ? std::string("inf") : pcm::to_string(prime_); }

int hilbert_symbol(const Rational& a, const Rational& b, const Place& place) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
    if (place.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;

    const Integer& p = place.prime();
    Integer u = square_class_integer(a);
    Integer v = square_class_integer(b);
    long alpha = valuation(u, p);
    long beta = valuation(v, p);
    mpz_remove(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    mpz_remove(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());

    if (p != 2) {
        int sign = 1;
        if ((alpha & 1) && (beta & 1) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) sign = -sign;
        if (beta & 1) sign *= legendre(u, p);
        if (alpha & 1) sign *= legendre(v, p);
        return sign;
    }

    auto eps = [](const Integer& w) { return static_cast<int>(mpz_fdiv_ui(w.get_mpz_t(), 4) == 3); };
    auto omega = [](const Integer& w) {
        unsigned long r = mpz_fdiv_ui(w.get_mpz_t(), 8);
        return static_cast<int>(r == 3 || r == 5);
    };
    int e = eps(u) * eps(v) + static_cast<int>(alpha & 1) * omega(v) + static_cast<int>(beta & 1) * omega(u);
    return (e & 1) ? -1 : 1;
}

std::vector<Integer> hilbert_bad_primes(const Rational& a, const Rational& b) {
    Integer n = 2 * a.get_num() * a.get_den() * b.get_num() * b.get_den();
    return prime_divisors(n);
}

SquarefreeDecomposition squarefree_decompose(const Integer& n) {
    if (n == 0) throw std::invalid_argument("squarefree decomposition of zero");
    SquarefreeDecomposition out{Integer(sgn(n)), Integer(1)};
    for (auto& [q, e] : factorize(n)) {
        if (e & 1) out.squarefree *= q;
        out.factor *= ipow(q, e / 2);
    }
    return out;
}

ZInvP::ZInvP(const Rational& value, const Integer& p) : p_(p) {
    if (value == 0) return;
    Integer den = value.get_den();
    long k = -static_cast<long>(mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()));
    if (den != 1) throw std::invalid_argument(to_string(value) + " is not in Z[1/" + to_string(p) + "]");
    unit_ = value.get_num();
    k += static_cast<long>(mpz_remove(unit_.get_mpz_t(), unit_.get_mpz_t(), p.get_mpz_t()));
    exponent_ = k;
}

ZInvP ZInvP::from_parts(Integer unit, long exponent, const Integer& p) {
    Rational v(unit);
    if (exponent >= 0) {
        v *= ipow(p, static_cast<unsigned long>(exponent));
    } else {
        v /= ipow(p, static_cast<unsigned long>(-exponent));
    }
    return ZInvP(v, p);
}

Rational ZInvP::value() const {
    Rational v(unit_);
    if (exponent_ >= 0) {
        v *= ipow(p_, static_cast<unsigned long>(exponent_));
    } else {
        v /= ipow(p_, static_cast<unsigned long>(-exponent_));
    }
    return v;
}

ZInvP operator+(const ZInvP& a, const ZInvP& b) { return ZInvP(a.value() + b.value(), a.p_); }
ZInvP operator-(const ZInvP& a, const ZInvP& b) { return ZInvP(a.value() - b.value(), a.p_); }
ZInvP operator*(const ZInvP& a, const ZInvP& b) {
    ZInvP out;
    out.p_ = a.p_;
    out.unit_ = a.unit_ * b.unit_;
    out.exponent_ = out.unit_ == 0 ? 0 : a.exponent_ + b.exponent_;
    return out;
}
ZInvP ZInvP::operator-() const {
    ZInvP out = *this;
    out.unit_ = -out.unit_;
    return out;
}
bool operator==(const ZInvP& a, const ZInvP& b) {
    return a.p_ == b.p_ && a.unit_ == b.unit_ && a.exponent_ == b.exponent_;
}

Integer zinvp_ideal_generator(const std::vector<ZInvP>& values) {
    Integer g = 0;
    for (const auto& v : values) g = gcd(g, v.unit());
    return g;
}

Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt of a negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool rational_sqrt(const Rational& q, Rational& root) {
    if (sgn(q) < 0) return false;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t())) {
        return false;
    }
    root = make_rational(isqrt(q.get_num()), isqrt(q.get_den()));
    return true;
}

Integer ipow(const Integer& x, unsigned long k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace pcm
