#include "pcm/quadform.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pcm {

QuadForm::QuadForm(std::vector<std::vector<Rational>> gram) : gram_(std::move(gram)) {
    const std::size_t n = gram_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw std::invalid_argument("Gram matrix must be square");
        for (std::size_t j = 0; j < i; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Gram matrix must be symmetric");
        }
    }
}

QuadForm QuadForm::from_coefficients(std::size_t n,
                                     const std::map<std::pair<std::size_t, std::size_t>, Rational>& coeff) {
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (const auto& [ij, c] : coeff) {
        auto [i, j] = ij;
        if (i > j || j >= n) throw std::invalid_argument("monomial index out of range");
        if (i == j) {
            g[i][i] += c;
        } else {
            g[i][j] += c / 2;
            g[j][i] += c / 2;
        }
    }
    return QuadForm(std::move(g));
}

Rational QuadForm::coefficient(std::size_t i, std::size_t j) const {
    if (i == j) return gram_[i][i];
    return 2 * gram_[i][j];
}

Rational QuadForm::evaluate(const std::vector<Rational>& v) const {
    if (v.size() != dimension()) throw std::invalid_argument("vector length does not match form dimension");
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) s += gram_[i][j] * v[i] * v[j];
    }
    return s;
}

Rational QuadForm::evaluate(const IntVector& v) const {
    std::vector<Rational> r(v.begin(), v.end());
    return evaluate(r);
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

bool QuadForm::is_positive_definite() const {
    for (std::size_t k = 1; k <= dimension(); ++k) {
        std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = gram_[i][j];
        }
        if (determinant(minor) <= 0) return false;
    }
    return true;
}

// f(v) = sum_i q_i (v_i + sum_{j>i} mu_ij v_j)^2, eliminating from the last
// coordinate downwards so the enumeration can fix v_{n-1} first.
std::vector<IntVector> QuadForm::solutions(const Rational& target) const {
    if (!is_positive_definite()) throw std::invalid_argument("enumeration needs a positive definite form");
    const std::size_t n = dimension();
    std::vector<IntVector> out;
    if (target < 0) return out;
    if (n == 0) return out;

    std::vector<std::vector<Rational>> a = gram_;
    std::vector<Rational> q(n);
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = a[i][i];
        for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = a[i][j] / q[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= q[i] * mu[i][j] * mu[i][k];
        }
    }

    IntVector v(n);
    std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t i, const Rational& budget) {
        Rational c = 0;
        for (std::size_t j = i + 1; j < n; ++j) c += mu[i][j] * v[j];
        if (i == 0) {
            Rational root;
            if (!rational_sqrt(budget / q[0], root)) return;
            std::vector<Rational> cands{root - c};
            if (root != 0) cands.push_back(-root - c);
            for (const Rational& cand : cands) {
                if (!is_integral(cand)) continue;
                v[0] = cand.get_num();
                out.push_back(v);
            }
            return;
        }
        Rational bound = budget / q[i];
        Integer s = isqrt(floor_of(bound)) + 1;
        Integer lo = floor_of(-c) - s, hi = ceil_of(-c) + s;
        for (Integer x = lo; x <= hi; ++x) {
            Rational shifted = x + c;
            Rational used = q[i] * shifted * shifted;
            if (used > budget) continue;
            v[i] = x;
            descend(i - 1, budget - used);
        }
    };
    descend(n - 1, target);
    std::sort(out.begin(), out.end());
    return out;
}

std::string QuadForm::to_string(const std::vector<std::string>& names) const {
    if (names.size() != dimension()) throw std::invalid_argument("wrong number of variable names");
    std::string s;
    for (std::size_t i = 0; i < dimension(); ++i) {
        for (std::size_t j = i; j < dimension(); ++j) {
            Rational c = coefficient(i, j);
            if (c == 0) continue;
            std::string mono = i == j ? names[i] + "^2" : names[i] + "*" + names[j];
            if (!s.empty()) s += c < 0 ? " - " : " + ";
            else if (c < 0) s += "-";
            Rational ac = abs(c);
            if (ac != 1) s += pcm::to_string(ac) + "*";
            s += mono;
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace pcm
