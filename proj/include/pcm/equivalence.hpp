#pragma once

#include "pcm/orders.hpp"
#include "pcm/padic.hpp"
#include "pcm/quaternion.hpp"

#include <optional>
#include <vector>

namespace pcm {

/// Every element of O with reduced norm exactly M, sorted by order-basis
/// coordinates. Definite algebras only.
std::vector<Quaternion> norm_sphere(const EichlerOrder& O, const Integer& M);

struct SearchElement {
    Quaternion q;
    IntVector coords;  // in the order basis
    long level;        // Nm(q) = p^(2 level)
};

/// Representatives of Gamma_{p,+} elements coming from norms p^{2k}, k <= kmax:
/// elements of pO are dropped (they repeat a lower level) and w, -w are
/// identified by keeping the one whose first nonzero coordinate is positive.
class UnitSearchSpace {
public:
    UnitSearchSpace(const EichlerOrder& O, const Integer& p, int kmax);

    const EichlerOrder& order() const { return order_; }
    const Integer& p() const { return p_; }
    int kmax() const { return kmax_; }
    const std::vector<SearchElement>& elements() const { return elements_; }
    std::size_t level_size(long k) const;

private:
    EichlerOrder order_;
    Integer p_;
    int kmax_;
    std::vector<SearchElement> elements_;
};

struct EquivalenceVerdict {
    bool equivalent = false;
    std::optional<Quaternion> witness;
    long level = 0;  // of the witness
    int kmax = 0;    // bound searched when nothing was found
};

/// Bounded witness search. Inequivalence is never claimed: a negative answer
/// only means no witness up to kmax.
class EquivalenceSearcher {
public:
    EquivalenceSearcher(const EichlerOrder& O, const MatrixImmersion& Phi, int kmax);

    const UnitSearchSpace& space() const { return space_; }
    const MatrixImmersion& immersion() const { return Phi_; }

    EquivalenceVerdict find(const QuadExt& z1, const QuadExt& z2) const;
    /// Every search element w with Phi(w) z1 = z2.
    std::vector<SearchElement> all_witnesses(const QuadExt& z1, const QuadExt& z2) const;

private:
    std::vector<std::size_t> candidates(const QuadExt& z1, const QuadExt& z2, bool first_only) const;
    bool verify(const Quaternion& w, const QuadExt& z1, const QuadExt& z2) const;

    UnitSearchSpace space_;
    MatrixImmersion Phi_;
};

EquivalenceVerdict gamma_plus_equivalent(const QuadExt& z1, const QuadExt& z2, const EichlerOrder& O,
                                         const MatrixImmersion& Phi, int kmax);

struct ConjugateCheck {
    /// No witness maps z to conj(z) within the bound.
    bool distinct = true;
    std::optional<Quaternion> witness;
    /// Every witness found has trace 0.
    bool trace_zero_holds = true;
    std::size_t witnesses_found = 0;
    std::size_t elements_searched = 0;
};

ConjugateCheck conjugate_class_check(const QuadExt& z, const EquivalenceSearcher& searcher);
ConjugateCheck conjugate_class_check(const QuadExt& z, const EichlerOrder& O, const MatrixImmersion& Phi, int kmax);

}  // namespace pcm
