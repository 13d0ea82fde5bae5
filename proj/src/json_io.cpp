#include "heatcone/json_io.hpp"

#include <cstdio>

namespace heatcone::io {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* provenance_name(singular::Provenance p) {
    switch (p) {
        case singular::Provenance::exact: return "exact";
        case singular::Provenance::numeric: return "numeric";
        default: return "unavailable";
    }
}

const char* verdict_name(singular::Verdict v) {
    switch (v) {
        case singular::Verdict::actual: return "actual";
        case singular::Verdict::needs_b: return "needs-constant-term";
        default: return "apparent-candidate";
    }
}

nlohmann::json exact_json(const exact::ExactScalar& v) {
    return {{"num", numerator(v.rational_part()).str()},
            {"den", denominator(v.rational_part()).str()},
            {"pi_half", v.pi_half_power()},
            {"text", v.to_text()},
            {"approx", fmt(v.to_double())}};
}

nlohmann::json term_value_json(const singular::TermValue& t) {
    nlohmann::json j;
    j["provenance"] = provenance_name(t.tag);
    if (t.tag == singular::Provenance::exact) {
        j["exact"] = exact_json(t.exact_value);
        j["value"] = fmt(t.value);
    } else if (t.tag == singular::Provenance::numeric) {
        j["value"] = fmt(t.value);
        j["scale"] = fmt(t.scale);
    }
    return j;
}

nlohmann::json singular_json(const singular::SingularTerms& st) {
    return {{"m", st.m},
            {"log_coefficient", term_value_json(st.c)},
            {"constant_term", term_value_json(st.b)},
            {"verdict", verdict_name(st.verdict)}};
}

nlohmann::json combo_json(const zeta::Combo& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : c.terms) {
        nlohmann::json jt;
        jt["coeff"] = exact_json(t.coeff);
        jt["i"] = t.i;
        if (t.beta.exact) {
            jt["beta_num"] = numerator(t.beta.r).str();
            jt["beta_den"] = denominator(t.beta.r).str();
        } else {
            jt["beta_float"] = fmt(t.beta.f);
        }
        terms.push_back(jt);
    }
    return {{"terms", terms}};
}

nlohmann::json coeff_list_json(const heat::CoeffList& a) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : a.values) vals.push_back(exact_json(v));
    return {{"n", a.n}, {"coefficients", vals}};
}

nlohmann::json root_json(const curvpoly::Root& r) {
    nlohmann::json j;
    j["value"] = fmt(r.value);
    j["multiplicity"] = r.mult;
    if (r.exact_rational) {
        j["exact"] = {{"num", numerator(*r.exact_rational).str()},
                      {"den", denominator(*r.exact_rational).str()}};
    } else if (r.exact_radical) {
        j["exact"] = {{"p_num", numerator(r.exact_radical->p).str()},
                      {"p_den", denominator(r.exact_radical->p).str()},
                      {"q_num", numerator(r.exact_radical->q).str()},
                      {"q_den", denominator(r.exact_radical->q).str()},
                      {"radicand", r.exact_radical->d.str()}};
    }
    return j;
}

nlohmann::json poly_json(const curvpoly::CurvaturePolynomial& p, bool with_roots) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(exact_json(c));
    nlohmann::json norm = nlohmann::json::array();
    for (const auto& c : p.normalized) norm.push_back(c.str());
    nlohmann::json j{{"n", p.n},
                     {"coefficients_ascending", coeffs},
                     {"normalized_descending", norm}};
    if (with_roots) {
        nlohmann::json rs = nlohmann::json::array();
        for (const auto& r : curvpoly::roots(p)) rs.push_back(root_json(r));
        j["roots"] = rs;
    }
    return j;
}

}  // namespace heatcone::io
