#include "pcm/orders.hpp"

#include <stdexcept>

namespace pcm {

namespace {

using Matrix4 = std::array<Coords4, 4>;

// Inverse of a 4x4 rational matrix by Gauss-Jordan; nullopt when singular.
std::optional<Matrix4> invert(Matrix4 m) {
    Matrix4 inv{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) inv[i][j] = i == j ? 1 : 0;
    }
    for (std::size_t c = 0; c < 4; ++c) {
        std::size_t piv = c;
        while (piv < 4 && m[piv][c] == 0) ++piv;
        if (piv == 4) return std::nullopt;
        std::swap(m[piv], m[c]);
        std::swap(inv[piv], inv[c]);
        Rational s = 1 / m[c][c];
        for (std::size_t k = 0; k < 4; ++k) {
            m[c][k] *= s;
            inv[c][k] *= s;
        }
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < 4; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

bool in_zinvp(const Rational& q, const Integer& p) {
    Integer den = q.get_den();
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    return den == 1;
}

QuadForm norm_form_on(const QuaternionAlgebra& A, const std::vector<Quaternion>& basis) {
    const std::size_t n = basis.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Polarization of the norm: (Nm(u+v) - Nm(u) - Nm(v)) / 2 = Tr(u conj(v)) / 2.
            g[i][j] = trace(multiply(A, basis[i], conj(basis[j]))) / 2;
        }
    }
    return QuadForm(std::move(g));
}

}  // namespace

EichlerOrder::EichlerOrder(QuaternionAlgebra algebra, std::array<Quaternion, 4> basis, Integer level, std::string name)
    : algebra_(std::move(algebra)), basis_(basis), level_(std::move(level)), name_(std::move(name)) {
    if (!(basis_[0] == Quaternion::scalar(1))) throw std::invalid_argument("first order basis vector must be 1");
    if (level_ < 1) throw std::invalid_argument("level must be a positive integer");
    Matrix4 m;
    for (std::size_t i = 0; i < 4; ++i) m[i] = basis_[i].coords();
    auto inv = invert(m);
    if (!inv) throw std::invalid_argument("order basis is linearly dependent");
    inverse_ = *inv;
    for (const Quaternion& u : basis_) {
        for (const Quaternion& v : basis_) {
            if (!contains(multiply(algebra_, u, v))) {
                throw std::invalid_argument("order basis is not closed under multiplication");
            }
        }
    }
}

Coords4 EichlerOrder::coordinates(const Quaternion& q) const {
    // q = sum_i c_i basis_i, i.e. coords(q) = c * M, so c = coords(q) * M^{-1}.
    Coords4 src = q.coords();
    Coords4 c;
    for (std::size_t j = 0; j < 4; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < 4; ++i) s += src[i] * inverse_[i][j];
        c[j] = s;
    }
    return c;
}

Quaternion EichlerOrder::element(const Coords4& c) const {
    Quaternion q{0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) q = q + c[i] * basis_[i];
    return q;
}

Quaternion EichlerOrder::element(const IntVector& c) const {
    if (c.size() != 4) throw std::invalid_argument("order coordinates need 4 entries");
    return element(Coords4{Rational(c[0]), Rational(c[1]), Rational(c[2]), Rational(c[3])});
}

bool EichlerOrder::contains(const Quaternion& q) const {
    for (const Rational& c : coordinates(q)) {
        if (!is_integral(c)) return false;
    }
    return true;
}

bool EichlerOrder::contains_localized(const Quaternion& q, const Integer& p) const {
    for (const Rational& c : coordinates(q)) {
        if (!in_zinvp(c, p)) return false;
    }
    return true;
}

QuadForm EichlerOrder::norm_form() const {
    return norm_form_on(algebra_, std::vector<Quaternion>(basis_.begin(), basis_.end()));
}

EichlerOrder hurwitz_order() {
    Rational h(1, 2);
    return EichlerOrder(QuaternionAlgebra(-1, -1),
                        {Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0}, Quaternion{0, 0, 1, 0}, Quaternion{h, h, h, h}},
                        1, "disc2-maximal");
}

EichlerOrder builtin_order(const std::string& name) {
    if (name == "disc2-maximal") return hurwitz_order();
    throw std::invalid_argument("unknown built-in order '" + name + "' (available: disc2-maximal)");
}

bool normalized_check(const EichlerOrder& O) {
    const auto& v = O.basis();
    Quaternion w = Rational(2) * v[3] - Quaternion::scalar(trace(v[3]));
    return v[1].is_pure() && v[2].is_pure() && w.is_pure();
}

PrimeSuborder::PrimeSuborder(const EichlerOrder& parent) : parent_(parent) {
    if (!normalized_check(parent_)) throw std::invalid_argument("order basis is not normalized");
    const auto& v = parent_.basis();
    basis_ = {Quaternion::scalar(1), Rational(2) * v[1], Rational(2) * v[2],
              Rational(2) * v[3] - Quaternion::scalar(trace(v[3]))};
}

Quaternion PrimeSuborder::pure_element(const Rational& x, const Rational& y, const Rational& z) const {
    return x * basis_[1] + y * basis_[2] + z * basis_[3];
}

PrimeSuborder prime_suborder(const EichlerOrder& O) { return PrimeSuborder(O); }

QuadForm ternary_normic_form(const PrimeSuborder& Op) {
    const auto& b = Op.basis();
    return norm_form_on(Op.parent().algebra(), {b[1], b[2], b[3]});
}

QuadForm quaternary_normic_form(const PrimeSuborder& Op) {
    const auto& b = Op.basis();
    return norm_form_on(Op.parent().algebra(), {b[0], b[1], b[2], b[3]});
}

bool QuadraticOrder::d_is_one_mod_four() const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), 4);
    return r == 1;
}

QuadraticOrder quadratic_order(const Integer& d, const Integer& m) {
    if (d == 0 || d == 1) throw std::invalid_argument("d must differ from 0 and 1");
    if (!is_squarefree(d)) throw std::invalid_argument("d = " + to_string(d) + " is not square-free");
    if (m < 1) throw std::invalid_argument("conductor m must be positive");
    QuadraticOrder o;
    o.d = d;
    o.m = m;
    o.field_discriminant = o.d_is_one_mod_four() ? d : 4 * d;
    o.discriminant = m * m * o.field_discriminant;
    return o;
}

}  // namespace pcm
