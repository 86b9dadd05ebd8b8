#pragma once

#include "pcm/embeddings.hpp"
#include "pcm/equivalence.hpp"

#include <string>
#include <vector>

namespace pcm {

/// D = 2, p = 1 mod 4: the order Z[1, i, j, (1+i+j+k)/2] of (-1, -1 / Q) and
/// i_p = sqrt(-1) in Q_p.
class FamilyContext {
public:
    FamilyContext(Integer p, long precision = kDefaultPrecision);

    const Integer& p() const { return p_; }
    long precision() const { return precision_; }
    const PAdic& i_p() const { return immersion_.sqrt_a(); }
    const EichlerOrder& order() const { return order_; }
    const MatrixImmersion& immersion() const { return immersion_; }
    const Integer& eps() const { return eps_; }

private:
    Integer p_;
    long precision_;
    EichlerOrder order_;
    MatrixImmersion immersion_;
    Integer eps_;
};

struct ABCTriple {
    Rational a, b, c;  // in Z[1/p]

    /// ((a+b)/2, (c+b)/2, b) generates Z[1/p].
    bool primitive(const Integer& p) const;
    /// b + c = a + b = 0 mod 2 after clearing the p-power.
    bool parity_ok(const Integer& p) const;
    Rational norm() const { return a * a + b * b + c * c; }
};

/// a = -(2y + z), b = z, c = -(2x + z).
ABCTriple abc_from_rep(const RepTriple& r);

/// [a + b i_p, 2c i_p, a - b i_p].
BinaryFormP family_form(const ABCTriple& t, const FamilyContext& ctx);

/// A point in exact form u0 + u1 i + u2 sqrt(d) + u3 i sqrt(d), plus its Q_{p^2} value.
struct CMPoint {
    std::array<Rational, 4> exact;
    QuadExt value;
    std::string display(const Integer& d) const;
};

struct CMPair {
    RepTriple rep;
    ABCTriple abc;
    BinaryFormP form;
    CMPoint plus;   // (-c i + m sqrt D_K) / (a + b i)
    CMPoint minus;  // (-c i - m sqrt D_K) / (a + b i)
};

/// One pair per primitive triple coming from rep_search up to kmax, in
/// rep_search order. Requires (d/p) = -1 and d < 0 square-free.
std::vector<CMPair> family_cm_points(const Integer& d, const Integer& m, int kmax, const FamilyContext& ctx);

struct ClassMember {
    std::size_t pair_index;
    bool plus;                // which point of the pair
    std::size_t class_index;
    std::optional<Quaternion> witness;  // maps the class representative to this point
    long witness_level = 0;
};

struct ClassFiltering {
    std::vector<ClassMember> representatives;  // first point found in each class
    std::vector<ClassMember> members;          // every point, with its class
    int kmax = 0;
};

/// Groups all points into Gamma_{p,+}-classes using witnesses up to
/// kmax_equiv. Classes are only as fine as the bounded search allows.
ClassFiltering filter_classes(const std::vector<CMPair>& pairs, const EquivalenceSearcher& searcher);

}  // namespace pcm
