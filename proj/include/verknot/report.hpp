#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "verknot/charvar.hpp"
#include "verknot/curve.hpp"
#include "verknot/cyclotomic.hpp"
#include "verknot/knot.hpp"
#include "verknot/torsion.hpp"
#include "verknot/verlinde.hpp"

namespace verknot {

using nlohmann::json;

/// { "order": N, "coeffs": ["num/den", ...], "float": re } -- the wire form
/// of a cyclotomic number. Exact values always travel as fraction strings,
/// never as floats.
inline json cyclotomic_json(const Cyclotomic& u) {
    json coeffs = json::array();
    for (const auto& c : u.coeffs()) coeffs.push_back(c.str());
    return json{{"order", u.order()}, {"coeffs", coeffs}, {"float", u.embed_float().real()}};
}

/// Fraction string when the value is rational, the full cyclotomic object
/// otherwise.
inline json exact_json(const Cyclotomic& u) {
    if (auto r = u.to_rational()) return r->str();
    return cyclotomic_json(u);
}

/// Component report entry: traces, excluded traces, torsion.
inline json component_json(const TorusKnot& k, const ComponentIndex& c) {
    const TorsionValue tau = adjoint_torsion(k, c);
    const TracePair excl = excluded_traces(k, c);
    return json{{"a", c.a},
                {"b", c.b},
                {"trace_alpha", 2.0 * std::cos(std::numbers::pi * c.a / k.p())},
                {"trace_beta", 2.0 * std::cos(std::numbers::pi * c.b / k.q())},
                {"excluded_traces", {excl.minus_float.real(), excl.plus_float.real()}},
                {"torsion", json{{"exact", exact_json(tau.exact)}, {"float", tau.value}}}};
}

inline json torsion_report(const TorusKnot& k, int g_max) {
    json comps = json::array();
    for (const auto& c : components(k)) comps.push_back(component_json(k, c));
    json sums = json::array();
    for (const auto& ps : torsion_power_sums(k, g_max)) {
        sums.push_back(json{{"g", ps.g},
                            {"value", ps.rational ? ps.rational->str() : "irrational"},
                            {"integer", ps.rational.has_value() && ps.rational->is_integer()}});
    }
    return json{{"p", k.p()}, {"q", k.q()}, {"r", k.r()}, {"s", k.s()}, {"components", comps}, {"power_sums", sums}};
}

inline json verlinde_report(const TorusKnot& k, int g, const MultiIndex& n) {
    json nj = json::array();
    for (const auto& [x, m] : n.entries()) nj.push_back({x.a, x.b, m});
    const Rational rational = d_rational(k, g, n);
    const Cyclotomic trig = verlinde_knot_trig(k, g, n);
    const auto trig_rational = trig.to_rational();
    const bool agree = trig_rational.has_value() && *trig_rational == rational;
    return json{{"p", k.p()},
                {"q", k.q()},
                {"g", g},
                {"n", nj},
                {"value", rational.str()},
                {"routes", json{{"rational", rational.str()}, {"trig", trig_rational ? trig_rational->str() : "irrational"}}},
                {"agree", agree}};
}

inline json curve_report(const TorusKnot& k) {
    json singulars = json::array();
    for (const auto& pt : singular_points(k.p(), k.q())) {
        singulars.push_back(json{{"a", pt.idx.a},
                                 {"b", pt.idx.b},
                                 {"X", pt.x_float.real()},
                                 {"Y", pt.y_float.real()},
                                 {"X_exact", exact_json(pt.X)},
                                 {"Y_exact", exact_json(pt.Y)}});
    }
    json exceptional = json::array();
    for (const auto& c : components(k)) {
        const auto ex = exceptional_intersections(k, c);
        const auto excl = excluded_traces(k, c);
        exceptional.push_back(json{{"a", c.a},
                                   {"b", c.b},
                                   {"plus", {ex.plus[0].real(), ex.plus[1].real()}},
                                   {"minus", {ex.minus[0].real(), ex.minus[1].real()}},
                                   {"excluded_traces", {excl.minus_float.real(), excl.plus_float.real()}}});
    }
    return json{{"p", k.p()},
                {"q", k.q()},
                {"singular_count", static_cast<int>(singulars.size())},
                {"singular_points", singulars},
                {"exceptional_intersections", exceptional}};
}

/// CSV sampling of the curve parametrization, header included.
inline std::string curve_csv(const TorusKnot& k, int samples, double t_min, double t_max) {
    if (samples < 2) throw std::invalid_argument("curve sampling needs at least 2 samples");
    std::string out = "t,X,Y,Z0,Z1\n";
    char line[256];
    for (int i = 0; i < samples; ++i) {
        const double t = t_min + (t_max - t_min) * i / (samples - 1);
        const auto pt = curve_param(k, t);
        std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g,%.12g\n", t, pt.X, pt.Y, pt.Z0, pt.Z1);
        out += line;
    }
    return out;
}

inline json integrality_json(const IntegralityReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        rows.push_back(json{{"g", row.g},
                            {"value", row.power_sum.str()},
                            {"integer", row.is_integer},
                            {"torsion_route", row.torsion_route ? row.torsion_route->str() : "irrational"},
                            {"agree", row.routes_agree}});
    }
    return json{{"p", report.knot.p()}, {"q", report.knot.q()}, {"rows", rows}, {"ok", report.all_ok}};
}

}  // namespace verknot
