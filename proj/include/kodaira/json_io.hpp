#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kodaira/blowup.hpp"
#include "kodaira/cech.hpp"
#include "kodaira/divisor.hpp"
#include "kodaira/errors.hpp"
#include "kodaira/hermitian.hpp"
#include "kodaira/kodaira_map.hpp"
#include "kodaira/line_bundle.hpp"
#include "kodaira/rational_func.hpp"

namespace kodaira::io {

using nlohmann::json;

// ---- polynomials and rational functions ----

inline json term_list_to_json(const LaurentPoly& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back({{"exponents", e}, {"coeff", rat_str(c)}});
    return arr;
}

inline LaurentPoly term_list_from_json(const json& arr,
                                       const std::vector<std::string>& vars) {
    if (!arr.is_array()) throw SchemaError("term list must be an array");
    LaurentPoly p(vars);
    for (const auto& t : arr) {
        if (!t.contains("exponents") || !t.contains("coeff"))
            throw SchemaError("term needs 'exponents' and 'coeff'");
        Exponents e = t.at("exponents").get<Exponents>();
        if (e.size() != vars.size()) throw SchemaError("exponent vector of wrong length");
        p.add_term(e, parse_rat(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline json to_json(const RationalFunc& f) {
    return {{"variables", f.variables()},
            {"num", term_list_to_json(f.num())},
            {"den", term_list_to_json(f.den())}};
}

inline RationalFunc rational_func_from_json(const json& j) {
    if (!j.contains("variables") || !j.contains("num"))
        throw SchemaError("rational function needs 'variables' and 'num'");
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    LaurentPoly num = term_list_from_json(j.at("num"), vars);
    LaurentPoly den = j.contains("den") ? term_list_from_json(j.at("den"), vars)
                                        : LaurentPoly::constant(vars, 1);
    return RationalFunc(std::move(num), std::move(den));
}

// ---- cocycles ----

inline json to_json(const MonomialCocycle& c) {
    json trans = json::array();
    for (const auto& [key, m] : c.transitions())
        trans.push_back({{"i", key.first},
                         {"j", key.second},
                         {"coeff", rat_str(m.coeff)},
                         {"exponents", m.exponents}});
    return {{"charts", c.charts()}, {"variables", c.variables()}, {"transitions", trans}};
}

inline MonomialCocycle cocycle_from_json(const json& j) {
    if (!j.contains("charts") || !j.contains("variables") || !j.contains("transitions"))
        throw SchemaError("cocycle needs 'charts', 'variables', 'transitions'");
    size_t charts = j.at("charts").get<size_t>();
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    MonomialCocycle c(charts, vars);
    std::vector<std::vector<bool>> given(charts, std::vector<bool>(charts, false));
    for (const auto& t : j.at("transitions")) {
        size_t i = t.at("i").get<size_t>();
        size_t jj = t.at("j").get<size_t>();
        if (i >= charts || jj >= charts || i == jj)
            throw SchemaError("invalid chart pair in transition");
        UnitMonomial m(parse_rat(t.at("coeff").get<std::string>()),
                       t.at("exponents").get<Exponents>());
        if (m.exponents.size() != vars.size())
            throw SchemaError("transition exponents of wrong length");
        c.set(i, jj, m);
        given[i][jj] = true;
    }
    // Pairs listed in one direction only get the inverse on the other.
    for (size_t i = 0; i < charts; ++i)
        for (size_t jj = 0; jj < charts; ++jj)
            if (i != jj && given[i][jj] && !given[jj][i]) c.set(jj, i, c.g(i, jj).inverse());
    return c;
}

// ---- divisors ----

inline json to_json(const DivisorP1& d) {
    json pts = json::array();
    for (const auto& [p, m] : d.support())
        pts.push_back({{"point", p.str()}, {"mult", m}});
    return {{"points", pts}};
}

inline PointP1 point_p1_from_string(const std::string& s) {
    if (s == "inf" || s == "infinity") return PointP1::infinity();
    return PointP1::affine(parse_rat(s));
}

inline DivisorP1 divisor_from_json(const json& j) {
    if (!j.contains("points")) throw SchemaError("divisor needs 'points'");
    DivisorP1 d;
    for (const auto& t : j.at("points"))
        d.add(point_p1_from_string(t.at("point").get<std::string>()),
              t.at("mult").get<long>());
    return d;
}

// ---- projective points ----

inline GaussRat gauss_from_json(const json& j) {
    if (j.is_string()) return GaussRat(parse_rat(j.get<std::string>()));
    if (j.is_number_integer()) return GaussRat(ExactScalar(j.get<long>()));
    if (j.is_object())
        return GaussRat(parse_rat(j.value("re", "0")), parse_rat(j.value("im", "0")));
    throw SchemaError("coordinate must be a rational string or {re, im} object");
}

inline json to_json(const GaussRat& g) {
    if (g.im == 0) return rat_str(g.re);
    return {{"re", rat_str(g.re)}, {"im", rat_str(g.im)}};
}

inline ProjPoint proj_point_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw SchemaError("point must be a coordinate array");
    std::vector<GaussRat> coords;
    for (const auto& c : j) coords.push_back(gauss_from_json(c));
    return ProjPoint(std::move(coords));
}

inline json to_json(const ProjPoint& p) {
    json arr = json::array();
    for (const auto& c : p.coords) arr.push_back(to_json(c));
    return arr;
}

// ---- reports ----

inline json to_json(const CohomologyReport& r) {
    json pieces = json::array();
    for (const auto& p : r.pieces)
        pieces.push_back({{"multidegree", p.multidegree}, {"dim", p.dim}});
    return {{"dim", r.dim}, {"window", r.window_pad}, {"graded_pieces", pieces}};
}

inline json to_json(const FormCoeffMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(to_json(e));
        rows.push_back(r);
    }
    return {{"n", m.n}, {"entries", rows}, {"normalization", m.normalization}};
}

inline FormCoeffMatrix form_matrix_from_json(const json& j) {
    FormCoeffMatrix m;
    m.n = j.at("n").get<size_t>();
    m.normalization = j.value("normalization", "");
    for (const auto& row : j.at("entries")) {
        std::vector<HermExpr> r;
        for (const auto& e : row) r.push_back(rational_func_from_json(e));
        m.entries.push_back(std::move(r));
    }
    if (m.entries.size() != m.n) throw SchemaError("form matrix row count != n");
    for (const auto& row : m.entries)
        if (row.size() != m.n) throw SchemaError("form matrix column count != n");
    return m;
}

inline json to_json(const PositivityReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        json point = json::array();
        for (const auto& c : v.point) point.push_back(rat_str(c));
        json minors = json::array();
        for (const auto& mm : v.minors) minors.push_back(rat_str(mm));
        verdicts.push_back({{"point", point},
                            {"positive", v.positive},
                            {"minors", minors},
                            {"min_minor", rat_str(v.min_minor)}});
    }
    return {{"all_positive", r.all_positive},
            {"normalization", r.normalization},
            {"verdicts", verdicts}};
}

inline json to_json(const BasePointReport& r) {
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(to_json(p));
    return {{"base_points", pts}, {"complete", r.complete}};
}

inline json to_json(const InjectivityReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"p", to_json(v.p)}, {"q", to_json(v.q)},
                            {"separated", v.separated}});
    return {{"all_separated", r.all_separated}, {"pairs", verdicts}};
}

inline json to_json(const ImmersionReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back({{"point", to_json(v.point)},
                            {"chart", v.chart},
                            {"rank", v.rank},
                            {"immersion", v.immersion}});
    return {{"all_immersive", r.all_immersive}, {"samples", verdicts}};
}

inline json to_json(const CanonicalCheck& c) {
    json residuals = json::array();
    for (const auto& [key, val] : c.residuals)
        residuals.push_back({{"pair", {key.first, key.second}}, {"residual", val}});
    return {{"ok", c.ok}, {"residuals", residuals}};
}

}  // namespace kodaira::io
