#pragma once

#include "pcm/arith.hpp"

#include <string>
#include <vector>

namespace pcm {

struct CountingInput {
    Integer D;  // discriminant of the definite algebra
    Integer N;  // level
    Integer d;  // K = Q(sqrt d)
    Integer m;  // conductor
    Integer p;
};

/// Throws std::invalid_argument naming the first violated precondition.
void validate(const CountingInput& in);

/// Number of reduced primitive positive definite forms of discriminant disc.
Integer class_number(const Integer& disc);

enum class FactorRole { DividesDp, DividesN, Other };

std::string to_string(FactorRole r);

/// 1 - chi, 1 + chi or 1, with chi the Kronecker symbol (D_K / ell).
Integer local_factor(const Integer& ell, FactorRole role, const Integer& field_discriminant);

struct LocalFactorEntry {
    Integer ell;
    FactorRole role;
    int symbol;
    Integer value;
};

struct NuReport {
    Integer class_number;  // h(m^2 D_K)
    Integer nu_H, nu_H_plus, nu_B, nu_B_plus;
    std::vector<LocalFactorEntry> factors;  // ell | DN, then p
};

NuReport nu_counts(const CountingInput& in);

Integer cm_p(const CountingInput& in);
Integer cm_inf(const CountingInput& in);

struct FormClassNumbers {
    Integer h_p;
    Integer h_inf;
};

FormClassNumbers form_class_numbers(const CountingInput& in);

/// Every ell | Dp non-split and every ell | N non-inert in K.
bool existence_criterion(const CountingInput& in);

/// Admissible tuples with m = 1 over D in {2, 3, 5, 7, 13}, small square-free
/// N, small p and small square-free d < 0, in a fixed order.
std::vector<CountingInput> admissible_grid();

}  // namespace pcm
