#ifndef PLANAUT_SERIALIZE_HPP
#define PLANAUT_SERIALIZE_HPP

#include "planaut/keller.hpp"
#include "planaut/parse.hpp"

#include <nlohmann/json.hpp>

#include <string>

// JSON forms of the library's result types. Polynomials travel as canonical
// strings, rationals as "n" or "n/d" strings, except polygon vertices, which
// are integer quadruples [x_num, x_den, y_num, y_den].
namespace planaut::io {

using Json = nlohmann::ordered_json;

class SchemaError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline Json integer(const Integer& z)
{
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

inline Rational rational(const Json& j)
{
    if (!j.is_string()) throw SchemaError("expected a rational string, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace detail

inline Json to_json(const newton::Polygon& poly)
{
    Json vs = Json::array();
    for (const auto& v : poly.vertices())
        vs.push_back(Json::array({detail::integer(v.x.get_num()), detail::integer(v.x.get_den()),
                                  detail::integer(v.y.get_num()), detail::integer(v.y.get_den())}));
    return {{"vertices", vs}};
}

inline Json to_json(const PolyMap& h) { return Json::array({to_string(h.first), to_string(h.second)}); }

inline Json to_json(const Parametrization& g) { return Json::array({to_string(g.p, 't'), to_string(g.q, 't')}); }

inline Json to_json(const AffineFactor& a)
{
    return {{"kind", "affine"},
            {"matrix", Json::array({Json::array({to_string(a.matrix[0][0]), to_string(a.matrix[0][1])}),
                                    Json::array({to_string(a.matrix[1][0]), to_string(a.matrix[1][1])})})},
            {"translation", Json::array({to_string(a.translation[0]), to_string(a.translation[1])})}};
}

/// The shift is written in the variable it depends on: x for axis "second",
/// y for axis "first".
inline Json to_json(const ElementaryFactor& e)
{
    const bool first = e.axis == Axis::First;
    return {{"kind", "elementary"}, {"axis", first ? "first" : "second"}, {"shift", to_string(e.shift, first ? 'y' : 'x')}};
}

/// Outermost factor first; the map is factors[0] o factors[1] o ...
inline Json to_json(const Factorization& f)
{
    Json out = Json::array();
    for (const auto& factor : f.factors) std::visit([&](const auto& x) { out.push_back(to_json(x)); }, factor);
    return out;
}

inline Json to_json(const embedding::EmbeddingReport& r)
{
    return {{"injective", r.injective},
            {"immersion", r.immersion},
            {"witness", r.witness ? Json(to_string(*r.witness)) : Json(nullptr)}};
}

inline Json to_json(const keller::KellerReport& r)
{
    return {{"jacobian", to_string(r.jacobian)}, {"is_keller", r.is_keller}};
}

inline Json to_json(const newton::SimilarityReport& r)
{
    return {{"similar", r.similar}, {"factor", to_string(r.factor)}, {"nf", to_json(r.nf)}, {"ng", to_json(r.ng)}};
}

inline Json to_json(const tame::NotAutomorphism& n)
{
    return {{"automorphism", false}, {"reason", tame::to_string(n.reason)}, {"residual", to_json(n.residual)}};
}

inline Json to_json(const Line& l) { return Json::array({to_string(l.a), to_string(l.b), to_string(l.c)}); }

inline Json to_json(const keller::Step& s)
{
    namespace st = keller::step;
    Json j{{"step", keller::step_name(s)}};
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, st::JacobianConstant>) {
                j["value"] = to_string(v.value);
            } else if constexpr (std::is_same_v<T, st::LineRestriction>) {
                j["gamma"] = to_json(v.gamma);
                j["chart"] = to_json(v.chart);
            } else if constexpr (std::is_same_v<T, st::EmbeddingVerified>) {
                j["report"] = to_json(v.report);
            } else if constexpr (std::is_same_v<T, st::Rectified>) {
                j["phi"] = to_json(v.phi);
                j["h1"] = to_json(v.h1);
            } else if constexpr (std::is_same_v<T, st::AxisFixed>) {
                j["g"] = to_json(v.g);
            } else if constexpr (std::is_same_v<T, st::DegreeCollapse>) {
                j["min_degree"] = v.min_degree;
            } else if constexpr (std::is_same_v<T, st::Inverted>) {
                j["factorization"] = to_json(v.factorization);
                j["inverse"] = to_json(v.inverse);
            } else {
                j["identity_verified"] = v.identity_verified;
            }
        },
        s);
    return j;
}

inline Json to_json(const keller::Certificate& c)
{
    Json steps = Json::array();
    for (const auto& s : c.steps) steps.push_back(to_json(s));
    return {{"map", to_json(c.map)}, {"line", c.line ? to_json(*c.line) : Json(nullptr)}, {"steps", steps}};
}

// Readers, for checking a saved certificate without re-running the pipeline.

inline PolyMap polymap_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2) throw SchemaError("a map is a pair of polynomial strings");
    return {parse_bipoly(j[0].get<std::string>()), parse_bipoly(j[1].get<std::string>())};
}

inline Parametrization parametrization_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2) throw SchemaError("a curve is a pair of polynomial strings");
    return {parse_unipoly(j[0].get<std::string>()), parse_unipoly(j[1].get<std::string>())};
}

inline AffineFactor affine_from_json(const Json& j)
{
    const Json& m = detail::field(j, "matrix");
    const Json& t = detail::field(j, "translation");
    return AffineFactor::make(detail::rational(m.at(0).at(0)), detail::rational(m.at(0).at(1)),
                              detail::rational(m.at(1).at(0)), detail::rational(m.at(1).at(1)),
                              detail::rational(t.at(0)), detail::rational(t.at(1)));
}

inline Factorization factorization_from_json(const Json& j)
{
    if (!j.is_array()) throw SchemaError("a factorization is an array of factors");
    Factorization f;
    for (const auto& item : j) {
        const std::string kind = detail::field(item, "kind").get<std::string>();
        if (kind == "affine") {
            f.factors.emplace_back(affine_from_json(item));
        } else if (kind == "elementary") {
            const std::string axis = detail::field(item, "axis").get<std::string>();
            if (axis != "first" && axis != "second") throw SchemaError("axis must be first or second");
            const BiPoly shift = parse_bipoly(detail::field(item, "shift").get<std::string>());
            const bool first = axis == "first";
            f.factors.emplace_back(ElementaryFactor{first ? Axis::First : Axis::Second, shift.to_uni(first ? Var::Y : Var::X)});
        } else {
            throw SchemaError("unknown factor kind '" + kind + "'");
        }
    }
    return f;
}

inline keller::Certificate certificate_from_json(const Json& j)
{
    namespace st = keller::step;
    keller::Certificate c;
    c.map = polymap_from_json(detail::field(j, "map"));
    const Json& line = detail::field(j, "line");
    if (!line.is_null())
        c.line = Line{detail::rational(line.at(0)), detail::rational(line.at(1)), detail::rational(line.at(2))};
    for (const auto& s : detail::field(j, "steps")) {
        const std::string name = detail::field(s, "step").get<std::string>();
        if (name == "JacobianConstant") {
            c.steps.emplace_back(st::JacobianConstant{detail::rational(detail::field(s, "value"))});
        } else if (name == "LineRestriction") {
            c.steps.emplace_back(st::LineRestriction{parametrization_from_json(detail::field(s, "gamma")),
                                                 affine_from_json(detail::field(s, "chart"))});
        } else if (name == "EmbeddingVerified") {
            const Json& r = detail::field(s, "report");
            embedding::EmbeddingReport rep{detail::field(r, "injective").get<bool>(),
                                           detail::field(r, "immersion").get<bool>(), std::nullopt};
            if (!detail::field(r, "witness").is_null()) rep.witness = parse_bipoly(r["witness"].get<std::string>());
            c.steps.emplace_back(st::EmbeddingVerified{rep});
        } else if (name == "Rectified") {
            c.steps.emplace_back(st::Rectified{factorization_from_json(detail::field(s, "phi")),
                                           factorization_from_json(detail::field(s, "h1"))});
        } else if (name == "AxisFixed") {
            c.steps.emplace_back(st::AxisFixed{polymap_from_json(detail::field(s, "g"))});
        } else if (name == "DegreeCollapse") {
            c.steps.emplace_back(st::DegreeCollapse{detail::field(s, "min_degree").get<int>()});
        } else if (name == "Inverted") {
            c.steps.emplace_back(st::Inverted{factorization_from_json(detail::field(s, "factorization")),
                                          polymap_from_json(detail::field(s, "inverse"))});
        } else if (name == "FinalCheck") {
            c.steps.emplace_back(st::FinalCheck{detail::field(s, "identity_verified").get<bool>()});
        } else {
            throw SchemaError("unknown certificate step '" + name + "'");
        }
    }
    return c;
}

}  // namespace planaut::io

#endif
