#include "slr/json_io.hpp"

namespace slr {

json to_json(const Mat2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

Mat2 mat2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(errc::bad_input, "matrix JSON must be [[a,b],[c,d]]");
    return checked_mat2(j[0][0].get<double>(), j[0][1].get<double>(), j[1][0].get<double>(),
                        j[1][1].get<double>(), 1e-9);
}

json to_json(const SurfaceRep& rep) {
    json a = json::array(), b = json::array(), c = json::array();
    for (const Mat2& m : rep.A) a.push_back(to_json(m));
    for (const Mat2& m : rep.B) b.push_back(to_json(m));
    for (const Mat2& m : rep.C) c.push_back(to_json(m));
    return json{{"g", rep.g}, {"n", rep.n}, {"A", a}, {"B", b}, {"C", c}};
}

SurfaceRep rep_from_json(const json& j) {
    SurfaceRep rep;
    try {
        rep.g = j.at("g").get<int>();
        rep.n = j.at("n").get<int>();
        for (const json& m : j.at("A")) rep.A.push_back(mat2_from_json(m));
        for (const json& m : j.at("B")) rep.B.push_back(mat2_from_json(m));
        for (const json& m : j.at("C")) rep.C.push_back(mat2_from_json(m));
    } catch (const json::exception& e) {
        fail(errc::bad_input, std::string("representation JSON: ") + e.what());
    }
    if (int(rep.A.size()) != rep.g || int(rep.B.size()) != rep.g || int(rep.C.size()) != rep.n)
        fail(errc::bad_input, "representation JSON: generator counts do not match g, n");
    return rep;
}

json to_json(const ConjClass& c) {
    json out{{"kind", conj_kind_name(c.kind)}};
    switch (c.kind) {
        case ConjKind::elliptic: out["angle"] = c.angle; break;
        case ConjKind::parabolic:
            out["trace_sign"] = c.trace_sign;
            out["shear_sign"] = c.shear_sign;
            out["fixed_directions"] = json::array({c.fixed_dir[0]});
            break;
        case ConjKind::hyperbolic:
            out["trace_sign"] = c.trace_sign;
            out["eigenvalue"] = c.eigenvalue;
            out["fixed_directions"] = json::array({c.fixed_dir[0], c.fixed_dir[1]});
            break;
        default: break;
    }
    return out;
}

json to_json(const SigmaValue& s) {
    if (s.im == 0) return s.re;
    return s.im > 0 ? "i" : "-i";
}

json to_json(const InvariantRecord& r) {
    json sigma = json::array(), sv = json::array(), kinds = json::array();
    for (const SigmaValue& s : r.sigma.sigma) sigma.push_back(to_json(s));
    for (int s : r.sigma.s) sv.push_back(s);
    for (ConjKind k : r.sigma.kinds) kinds.push_back(conj_kind_name(k));
    json out{{"toledo", r.toledo},
             {"rho", r.rho},
             {"signature", r.signature},
             {"sigma", sigma},
             {"s", sv},
             {"family", r.sigma.mixed ? "mixed" : family_name(r.sigma.family)},
             {"kinds", kinds},
             {"mw_slack", json::array({r.mw_slack_toledo, r.mw_slack_sign})}};
    out["psl_signature"] = r.psl_signature ? json(*r.psl_signature) : json(nullptr);
    out["euler"] = r.euler ? json(*r.euler) : json(nullptr);
    out["s_plus"] = r.s_plus;
    out["s_minus"] = r.s_minus;
    out["psl_bounds_ok"] = r.psl_bounds_ok;
    return out;
}

json to_json(const ComponentLabel& l) {
    json sigma = json::array();
    for (const SigmaValue& s : l.sigma) sigma.push_back(to_json(s));
    return json{{"sigma", sigma}, {"invariant", l.invariant}, {"multiplicity", l.multiplicity}};
}

json to_json(const AuditReport& r) {
    json items = json::array();
    for (const AuditItem& it : r.items)
        items.push_back(json{{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    return json{{"all_pass", r.all_pass}, {"items", items}};
}

json to_json(const SamplingReport& r) {
    json hist = json::object();
    for (const auto& [k, v] : r.histogram) hist[k] = v;
    json missing = json::array();
    for (const auto& k : r.missing) missing.push_back(k);
    return json{{"family", family_name(r.family)},
                {"g", r.g},
                {"n", r.n},
                {"samples", r.samples},
                {"seed", r.seed},
                {"admissible", r.admissible_total},
                {"observed", r.observed_distinct},
                {"inadmissible", r.inadmissible},
                {"coverage", r.coverage},
                {"acceptance_rate", r.acceptance_rate},
                {"histogram", hist},
                {"missing", missing}};
}

json to_json(const OracleReport& r) {
    return json{{"dim", r.dim},
                {"signature_direct", r.signature_direct},
                {"signature_formula", r.signature_formula},
                {"match", r.match},
                {"skew_residual", r.skew_residual},
                {"min_singular_value", r.min_singular_value}};
}

} // namespace slr
