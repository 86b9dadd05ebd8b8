#include "json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace pcm::io {

json to_json(const Integer& n) { return to_string(n); }

json to_json(const Rational& q) { return to_string(q); }

json to_json(const PAdic& x) {
    json j;
    if (x.is_zero() && x.absolute_precision() >= kExactPrecision) {
        j["val"] = nullptr;
    } else {
        j["val"] = x.valuation();
    }
    j["unit"] = to_string(x.unit());
    j["prec"] = x.relative_precision();
    j["text"] = x.render();
    return j;
}

json to_json(const QuadExt& z) { return {{"x", to_json(z.x())}, {"y", to_json(z.y())}, {"eps", to_json(z.eps())}}; }

json to_json(const Quaternion& q) { return json::array({to_json(q.x), to_json(q.y), to_json(q.z), to_json(q.t)}); }

json to_json(const Matrix2P& g) {
    return json::array({json::array({to_json(g.a), to_json(g.b)}), json::array({to_json(g.c), to_json(g.d)})});
}

json to_json(const BinaryFormP& f) {
    return {{"coefficients", json::array({to_json(f.A), to_json(f.B), to_json(f.C)})},
            {"discriminant", to_json(f.discriminant())},
            {"determinant", to_json(f.determinant())}};
}

json to_json(const FixedPoint& z) {
    if (z.infinite) return {{"infinite", true}};
    return {{"infinite", false}, {"point", to_json(z.z)}};
}

json to_json(const RepTriple& r) {
    auto v = r.values();
    return {{"xyz", json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])})},
            {"level", r.level},
            {"scaled", json::array({to_json(r.scaled[0]), to_json(r.scaled[1]), to_json(r.scaled[2])})},
            {"primitive", r.primitive}};
}

json to_json(const ABCTriple& t) { return json::array({to_json(t.a), to_json(t.b), to_json(t.c)}); }

json to_json(const Embedding& e) {
    return {{"d", to_json(e.order.d)},
            {"m", to_json(e.order.m)},
            {"sqrt_d_image", to_json(e.sqrt_d)},
            {"generator_image", to_json(e.generator)},
            {"alpha", to_json(e.alpha)},
            {"optimal", e.optimal}};
}

json to_json(const NuReport& r) {
    json factors = json::array();
    for (const auto& f : r.factors) {
        factors.push_back({{"ell", to_json(f.ell)},
                           {"role", to_string(f.role)},
                           {"symbol", f.symbol},
                           {"factor", to_json(f.value)}});
    }
    return {{"class_number", to_json(r.class_number)},
            {"nu_H", to_json(r.nu_H)},
            {"nu_H_plus", to_json(r.nu_H_plus)},
            {"nu_B", to_json(r.nu_B)},
            {"nu_B_plus", to_json(r.nu_B_plus)},
            {"local_factors", factors}};
}

json to_json(const EquivalenceVerdict& v) {
    if (v.equivalent) {
        return {{"verdict", "equivalent"}, {"witness", to_json(*v.witness)}, {"witness_level", v.level}};
    }
    return {{"verdict", "not-found-up-to-bound"}, {"kmax", v.kmax}};
}

json to_json(const ConjugateCheck& c) {
    json j{{"distinct", c.distinct},
           {"witnesses_found", c.witnesses_found},
           {"trace_zero_holds", c.trace_zero_holds},
           {"elements_searched", c.elements_searched}};
    j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
    return j;
}

std::array<Rational, 4> parse_matrix(const std::string& text) {
    std::array<Rational, 4> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t n = 0;
    while (std::getline(ss, item, ',')) {
        if (n == 4) throw std::invalid_argument("--matrix takes exactly four entries a,b,c,d");
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw std::invalid_argument("empty matrix entry");
        out[n++] = parse_rational(item.substr(first, last - first + 1));
    }
    if (n != 4) throw std::invalid_argument("--matrix takes exactly four entries a,b,c,d");
    return out;
}

PAdic parse_padic(const json& j, const Integer& p, long precision) {
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        return q == 0 ? PAdic::zero(p) : PAdic::from_rational(q, p, precision);
    }
    if (j.is_number_integer()) {
        Rational q(Integer(std::to_string(j.get<long long>())));
        return q == 0 ? PAdic::zero(p) : PAdic::from_rational(q, p, precision);
    }
    if (j.is_object()) {
        if (!j.contains("unit") || !j.contains("prec")) {
            throw std::invalid_argument("compact p-adic values need \"unit\" and \"prec\"");
        }
        Integer unit = parse_integer(j.at("unit").get<std::string>());
        long prec = j.at("prec").get<long>();
        if (j.at("val").is_null()) return PAdic::zero(p);
        long val = j.at("val").get<long>();
        if (prec == 0) return PAdic::zero(p, val);
        if (unit % p == 0) throw std::invalid_argument("compact p-adic unit must be prime to p");
        return PAdic::from_parts(p, val, unit, prec);
    }
    throw std::invalid_argument("p-adic component must be a rational string or a {val, unit, prec} object");
}

QuadExt parse_point(const std::string& text, const Integer& p, long precision) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("--point is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        throw std::invalid_argument("--point must be a JSON object with \"x\" and \"y\"");
    }
    return QuadExt(parse_padic(j.at("x"), p, precision), parse_padic(j.at("y"), p, precision), canonical_eps(p));
}

}  // namespace pcm::io
