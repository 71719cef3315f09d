#include "zonotopal/io.hpp"

#include <limits>

#include "zonotopal/errors.hpp"

namespace zonotopal::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) bad("expected a rational string, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
        bad("malformed rational " + j.dump());
    }
}

Json to_json(const IntVec& v) { return Json(v); }

IntVec int_vector_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) bad("expected an integer vector of length " + std::to_string(dim) + ", got " + j.dump());
    IntVec out;
    for (const auto& c : j) {
        if (!c.is_number_integer()) bad("expected integer coordinate, got " + c.dump());
        out.push_back(c.get<std::int64_t>());
    }
    return out;
}

RatVector rational_vector_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) bad("expected a vector of length " + std::to_string(dim) + ", got " + j.dump());
    RatVector out;
    for (const auto& c : j) out.push_back(rational_from_json(c));
    return out;
}

Json to_json(const VectorList& x) {
    Json vs = Json::array();
    for (const auto& v : x.vectors()) vs.push_back(to_json(v));
    return Json{{"dim", x.dim()}, {"vectors", vs}};
}

VectorList vector_list_from_json(const Json& j) {
    const Json& vs = field(j, "vectors");
    if (!vs.is_array()) bad("\"vectors\" must be an array");
    std::size_t dim = 0;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_unsigned()) bad("\"dim\" must be a non-negative integer");
        dim = j["dim"].get<std::size_t>();
    } else if (!vs.empty() && vs[0].is_array()) {
        dim = vs[0].size();
    } else {
        bad("\"dim\" is required for an empty list");
    }
    std::vector<IntVec> out;
    for (const auto& v : vs) out.push_back(int_vector_from_json(v, dim));
    if (out.size() > 62) bad("lists longer than 62 vectors are not supported");
    return VectorList(dim, std::move(out));
}

Json to_json(const MultiPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(Json{{"exps", e}, {"coef", to_json(c)}});
    return out;
}

MultiPoly poly_from_json(const Json& j, std::size_t nvars) {
    if (!j.is_array()) bad("a polynomial is a list of {\"exps\", \"coef\"} terms");
    MultiPoly p(nvars);
    for (const auto& t : j) {
        const Json& e = field(t, "exps");
        if (!e.is_array() || e.size() != nvars) bad("exponent vector must have " + std::to_string(nvars) + " entries");
        Exponent exps;
        for (const auto& k : e) {
            if (!k.is_number_unsigned()) bad("exponents must be non-negative integers");
            exps.push_back(k.get<int>());
        }
        p.add_term(exps, rational_from_json(field(t, "coef")));
    }
    return p;
}

Json to_json(const PSpaceBasis& b) {
    Json basis = Json::array();
    for (const auto& p : b.basis()) basis.push_back(to_json(p));
    return Json{{"kind", b.kind() == PSpaceKind::central ? "central" : "internal"},
                {"dimension", b.dimension()},
                {"hilbert", b.hilbert()},
                {"basis", basis}};
}

Json to_json(const LatticePointSet& s) {
    Json pts = Json::array();
    for (const auto& z : s.points) pts.push_back(to_json(z));
    return Json{{"points", pts}};
}

Json to_json(const TuttePoly& t) {
    Json terms = Json::array();
    for (const auto& [k, c] : t.coefficients)
        terms.push_back(Json{{"x", k.first}, {"y", k.second}, {"coef", c.get_str()}});
    return Json{{"coefficients", terms}};
}

Json to_json(const PiecewiseSpline& s) {
    Json normals = Json::array();
    for (const auto& n : s.arrangement.normals()) normals.push_back(to_json(n));
    Json pieces = Json::array();
    for (std::size_t t = 0; t < s.pieces.size(); ++t)
        pieces.push_back(Json{{"signs", to_string(s.arrangement.topes()[t].signs)}, {"poly", to_json(s.pieces[t])}});
    return Json{{"normals", normals}, {"pieces", pieces}, {"degree", s.degree}, {"translation", to_json(s.translation)}};
}

Json to_json(const Interpolant& i) {
    Json cert = Json::array();
    for (const auto& [z, v] : i.certificate) cert.push_back(Json{{"point", to_json(z)}, {"value", to_json(v)}});
    Json coords = Json::array();
    for (const auto& c : i.internal_basis_coords) coords.push_back(to_json(c));
    return Json{{"poly", to_json(i.poly)}, {"certificate", cert}, {"internal_basis_coords", coords}};
}

ValuesFile values_file_from_json(const Json& j) {
    ValuesFile out;
    out.matrix = vector_list_from_json(field(j, "matrix"));
    out.values = GridFunction(out.matrix.dim());
    const Json& vs = field(j, "values");
    if (!vs.is_array()) bad("\"values\" must be an array");
    for (const auto& e : vs) {
        IntVec z = int_vector_from_json(field(e, "point"), out.matrix.dim());
        if (out.values.values().count(z)) bad("point listed twice: " + e["point"].dump());
        out.values.set(z, rational_from_json(field(e, "value")));
    }
    return out;
}

Json to_json(const ValuesFile& v) {
    Json vs = Json::array();
    for (const auto& [z, c] : v.values.values()) vs.push_back(Json{{"point", to_json(z)}, {"value", to_json(c)}});
    return Json{{"matrix", to_json(v.matrix)}, {"values", vs}};
}

Json approximate(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>()).get_d();
        } catch (const std::invalid_argument&) {
            return j;
        }
    }
    if (j.is_array() || j.is_object()) {
        Json out = j;
        for (auto it = out.begin(); it != out.end(); ++it) *it = approximate(*it);
        return out;
    }
    return j;
}

}  // namespace zonotopal::io
