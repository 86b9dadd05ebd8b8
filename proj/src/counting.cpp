#include "pcm/counting.hpp"

#include "pcm/orders.hpp"

#include <stdexcept>

namespace pcm {

namespace {

Integer field_discriminant(const Integer& d) { return quadratic_order(d, 1).field_discriminant; }

bool shares_prime(const Integer& a, const Integer& b) { return gcd(a, b) != 1; }

}  // namespace

void validate(const CountingInput& in) {
    if (in.p < 3 || !is_prime(in.p)) throw std::invalid_argument("p must be an odd prime");
    if (in.D < 2 || !is_squarefree(in.D)) throw std::invalid_argument("D must be a square-free integer > 1");
    if (prime_divisors(in.D).size() % 2 == 0) {
        throw std::invalid_argument("D must have an odd number of prime factors (definite algebra)");
    }
    if (in.N < 1) throw std::invalid_argument("N must be positive");
    if (!is_squarefree(in.N)) {
        throw std::invalid_argument("N must be square-free; local factors for other levels are not implemented");
    }
    if (shares_prime(in.D, in.N)) throw std::invalid_argument("D and N must be coprime");
    if (in.D % in.p == 0 || in.N % in.p == 0) throw std::invalid_argument("p must not divide DN");
    if (in.d >= 0) throw std::invalid_argument("d must be negative");
    if (!is_squarefree(in.d)) throw std::invalid_argument("d must be square-free");
    if (in.m < 1) throw std::invalid_argument("m must be positive");
    if (shares_prime(in.m, in.D * in.N * in.p)) {
        throw std::invalid_argument("m must be coprime to DNp; the local factors for such conductors are not covered");
    }
    if (kronecker(field_discriminant(in.d), in.p) != -1) {
        throw std::invalid_argument("K = Q(sqrt " + to_string(in.d) + ") is not p-imaginary: p must be inert");
    }
}

Integer class_number(const Integer& disc) {
    if (disc >= 0) throw std::invalid_argument("discriminant must be negative");
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), disc.get_mpz_t(), 4);
    if (r != 0 && r != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
    Integer count = 0;
    Integer n = -disc;
    // Reduced: |b| <= a <= c, so 3a^2 <= n.
    for (Integer a = 1; 3 * a * a <= n; ++a) {
        for (Integer b = -a + 1; b <= a; ++b) {
            Integer num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            Integer c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (gcd(gcd(a, b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

std::string to_string(FactorRole r) {
    switch (r) {
        case FactorRole::DividesDp: return "divides-Dp";
        case FactorRole::DividesN: return "divides-N";
        case FactorRole::Other: return "other";
    }
    return "unknown";
}

Integer local_factor(const Integer& ell, FactorRole role, const Integer& fd) {
    int chi = kronecker(fd, ell);
    switch (role) {
        case FactorRole::DividesDp: return 1 - chi;
        case FactorRole::DividesN: return 1 + chi;
        case FactorRole::Other: return 1;
    }
    return 1;
}

NuReport nu_counts(const CountingInput& in) {
    validate(in);
    const Integer fd = field_discriminant(in.d);
    NuReport rep;
    rep.class_number = class_number(in.m * in.m * fd);
    Integer product_H = 1;
    auto add = [&](const Integer& ell, FactorRole role) {
        LocalFactorEntry e{ell, role, kronecker(fd, ell), local_factor(ell, role, fd)};
        rep.factors.push_back(e);
        return e.value;
    };
    for (const Integer& ell : prime_divisors(in.D)) product_H *= add(ell, FactorRole::DividesDp);
    for (const Integer& ell : prime_divisors(in.N)) {
        product_H *= add(ell, FactorRole::DividesN);
    }
    Integer nu_p = add(in.p, FactorRole::DividesDp);

    rep.nu_H = rep.class_number * product_H;
    rep.nu_H_plus = 2 * rep.nu_H;
    // The definite side over Dp is recounted from the full table rather than
    // derived from nu_H, so the relation below is a genuine check.
    Integer product_B = 1;
    for (const auto& e : rep.factors) product_B *= e.value;
    rep.nu_B = rep.class_number * product_B;
    rep.nu_B_plus = 2 * rep.nu_B;
    if (nu_p != 2 || rep.nu_B != 2 * rep.nu_H) {
        throw std::logic_error("nu(Dp,...; O_B) = 2 nu(D,...; O[1/p]) failed");
    }
    return rep;
}

Integer cm_p(const CountingInput& in) { return nu_counts(in).nu_H_plus; }

Integer cm_inf(const CountingInput& in) {
    NuReport r = nu_counts(in);
    Integer v = r.nu_B_plus / 2;
    if (v != r.nu_H_plus) throw std::logic_error("cm_p != cm_inf");
    return v;
}

FormClassNumbers form_class_numbers(const CountingInput& in) {
    NuReport r = nu_counts(in);
    return {r.nu_H, r.nu_B};
}

bool existence_criterion(const CountingInput& in) {
    validate(in);
    const Integer fd = field_discriminant(in.d);
    bool ok = kronecker(fd, in.p) != 1;
    for (const Integer& ell : prime_divisors(in.D)) ok = ok && kronecker(fd, ell) != 1;
    for (const Integer& ell : prime_divisors(in.N)) ok = ok && kronecker(fd, ell) != -1;
    if (ok != (nu_counts(in).nu_B_plus > 0)) throw std::logic_error("existence criterion disagrees with the counts");
    return ok;
}

std::vector<CountingInput> admissible_grid() {
    std::vector<CountingInput> out;
    for (int D : {2, 3, 5, 7, 13}) {
        for (int N : {1, 3, 5, 11, 15}) {
            for (int p : {3, 5, 7, 11, 13}) {
                for (int d : {-1, -2, -3, -5, -6, -7, -10, -11, -13, -14, -15, -19, -23}) {
                    CountingInput in{D, N, d, 1, p};
                    try {
                        validate(in);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    out.push_back(in);
                }
            }
        }
    }
    return out;
}

}  // namespace pcm
