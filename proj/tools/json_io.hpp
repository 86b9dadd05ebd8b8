#pragma once

#include "pcm/counting.hpp"
#include "pcm/embeddings.hpp"
#include "pcm/equivalence.hpp"
#include "pcm/family2p.hpp"

#include <json.hpp>

namespace pcm::io {

using nlohmann::json;

json to_json(const Integer& n);
json to_json(const Rational& q);
/// {"val", "unit", "prec", "text"}; val is null for an exact zero.
json to_json(const PAdic& x);
json to_json(const QuadExt& z);
json to_json(const Quaternion& q);
json to_json(const Matrix2P& g);
json to_json(const BinaryFormP& f);
json to_json(const FixedPoint& z);
json to_json(const RepTriple& r);
json to_json(const ABCTriple& t);
json to_json(const Embedding& e);
json to_json(const NuReport& r);
json to_json(const EquivalenceVerdict& v);
json to_json(const ConjugateCheck& c);

/// "a,b,c,d" with rational entries.
std::array<Rational, 4> parse_matrix(const std::string& text);

/// Either a rational string or {"val", "unit", "prec"}.
PAdic parse_padic(const json& j, const Integer& p, long precision);
/// {"x": ..., "y": ...}; the y component multiplies sqrt(eps) for the canonical eps.
QuadExt parse_point(const std::string& text, const Integer& p, long precision);

}  // namespace pcm::io
