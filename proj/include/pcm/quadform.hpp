#pragma once

#include "pcm/arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace pcm {

using IntVector = std::vector<Integer>;

/// Quadratic form f(v) = v^T G v with G symmetric and rational (half-integral
/// off-diagonal entries occur for integral forms with odd cross terms).
class QuadForm {
public:
    explicit QuadForm(std::vector<std::vector<Rational>> gram);

    /// From monomial coefficients: coeff[{i, j}] with i <= j multiplies v_i v_j.
    static QuadForm from_coefficients(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, Rational>& coeff);

    std::size_t dimension() const { return gram_.size(); }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }
    /// Coefficient of v_i v_j in the expanded polynomial (i <= j).
    Rational coefficient(std::size_t i, std::size_t j) const;

    Rational evaluate(const std::vector<Rational>& v) const;
    Rational evaluate(const IntVector& v) const;

    /// All leading principal minors positive.
    bool is_positive_definite() const;

    /// Every integer vector with f(v) == target, lexicographically sorted.
    /// Exact arithmetic throughout; requires a positive definite form.
    std::vector<IntVector> solutions(const Rational& target) const;

    /// "4*X^2 + 4*X*Z + ..." in the given variable names.
    std::string to_string(const std::vector<std::string>& names) const;

    friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.gram_ == b.gram_; }

private:
    std::vector<std::vector<Rational>> gram_;
};

Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace pcm
