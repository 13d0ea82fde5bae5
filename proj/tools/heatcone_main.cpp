#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heatcone/cross_section.hpp"
#include "heatcone/curvpoly.hpp"
#include "heatcone/heat_coeffs.hpp"
#include "heatcone/json_io.hpp"
#include "heatcone/oracle.hpp"
#include "heatcone/singular.hpp"
#include "heatcone/verify.hpp"
#include "heatcone/zeta.hpp"

// Command line front end.  Every run with the same arguments prints the
// same bytes: floats go through one formatter and json keys are sorted.

namespace {

using heatcone::CrossSection;
using heatcone::exact::Rational;

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational like 3 or -9/64: " + text);
    }
}

struct GeomOpts {
    std::string family;
    int n = 3;
    int order = 2;            // lens order
    std::string kappa = "1";
    std::string vol_ratio = "1";
    std::string radius;       // sphere shorthand: kappa = 1/r^2, ratio = r^n
    std::string volume = "1";
    std::string sin_alpha = "1";
    double sin_alpha_float = 0;
    bool sin_alpha_is_float = false;
};

void add_geometry_flags(CLI::App* cmd, GeomOpts& g) {
    cmd->add_option("--geometry", g.family,
                    "circle | sphere | space-form | lens | projective | torus")
        ->required()
        ->check(CLI::IsMember(
            {"circle", "sphere", "space-form", "lens", "projective", "torus"}));
    cmd->add_option("--n", g.n, "cross-section dimension");
    cmd->add_option("--order", g.order, "lens space order");
    cmd->add_option("--kappa", g.kappa, "sphere curvature (rational)");
    cmd->add_option("--vol-ratio", g.vol_ratio, "volume ratio (rational)");
    cmd->add_option("--radius", g.radius,
                    "sphere radius shorthand (rational); sets kappa and vol-ratio");
    cmd->add_option("--volume", g.volume, "torus volume (rational)");
    cmd->add_option("--sin-alpha", g.sin_alpha, "circle: sine of the half-angle");
    cmd->add_option("--sin-alpha-float", g.sin_alpha_float,
                    "circle: the same as a float")
        ->each([&g](const std::string&) { g.sin_alpha_is_float = true; });
}

CrossSection build_geometry(const GeomOpts& g) {
    if (g.family == "circle") {
        if (g.sin_alpha_is_float)
            return heatcone::Circle{heatcone::zeta::Beta::from_double(g.sin_alpha_float)};
        return heatcone::Circle{
            heatcone::zeta::Beta::from_rational(parse_rational(g.sin_alpha))};
    }
    if (g.family == "sphere") {
        Rational kappa = parse_rational(g.kappa);
        Rational ratio = parse_rational(g.vol_ratio);
        if (!g.radius.empty()) {
            const Rational r = parse_rational(g.radius);
            if (r <= 0) throw CLI::ValidationError("radius must be positive");
            kappa = Rational(1) / (r * r);
            ratio = heatcone::exact::pow_rational(r, g.n);
        }
        return heatcone::Sphere{g.n, kappa, ratio};
    }
    if (g.family == "space-form")
        return heatcone::SpaceForm{g.n, parse_rational(g.vol_ratio)};
    if (g.family == "lens") return heatcone::Lens{g.order};
    if (g.family == "projective") return heatcone::RealProjective{g.n};
    return heatcone::FlatTorus{g.n, parse_rational(g.volume)};
}

std::optional<heatcone::zeta::Combo> combo_for(const CrossSection& cs) {
    if (const auto* c = std::get_if<heatcone::Circle>(&cs))
        return heatcone::zeta::circle_combo(c->sin_alpha);
    if (const auto* s = std::get_if<heatcone::Sphere>(&cs)) {
        if (s->kappa == 1 && s->vol_ratio == 1)
            return heatcone::zeta::sphere_combo(s->n);
        return std::nullopt;
    }
    if (const auto* p = std::get_if<heatcone::RealProjective>(&cs)) {
        if (p->n % 4 == 1) return heatcone::zeta::rpn_combo(p->n);
        return std::nullopt;
    }
    return std::nullopt;
}

void emit(const nlohmann::json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // text: one "key: value" line per top-level entry
    for (const auto& [key, value] : j.items()) {
        if (value.is_string())
            std::cout << key << ": " << value.get<std::string>() << "\n";
        else
            std::cout << key << ": " << value.dump() << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"singular heat-trace terms of cones"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "json | text | csv")
        ->check(CLI::IsMember({"json", "text", "csv"}));

    auto* coeffs = app.add_subcommand("coeffs", "heat coefficients of a cross-section");
    GeomOpts gc;
    int jmax = 4;
    add_geometry_flags(coeffs, gc);
    coeffs->add_option("--jmax", jmax, "highest order");

    auto* terms = app.add_subcommand("terms", "log coefficient and constant term");
    GeomOpts gt;
    int m_override = 0;
    add_geometry_flags(terms, gt);
    terms->add_option("--m", m_override, "cone dimension (default n+1)");

    auto* poly = app.add_subcommand("poly", "log coefficient as a polynomial in kappa");
    int poly_n = 3;
    bool with_roots = false;
    poly->add_option("--n", poly_n, "cross-section dimension (odd)")->required();
    poly->add_flag("--roots", with_roots, "include the real roots");

    auto* zeta_cmd = app.add_subcommand("zeta", "shifted spectral zeta values");
    GeomOpts gz;
    std::string s_text;
    bool want_residue = false;
    std::string convention = "s";
    add_geometry_flags(zeta_cmd, gz);
    zeta_cmd->add_option("--s", s_text, "evaluation point (rational)")->required();
    zeta_cmd->add_flag("--residue", want_residue, "residue at s instead of the value");
    zeta_cmd->add_option("--convention", convention, "s | argument (residue variable)")
        ->check(CLI::IsMember({"s", "argument"}));

    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues with multiplicities");
    GeomOpts gs;
    double lambda_max = 100;
    add_geometry_flags(spectrum_cmd, gs);
    spectrum_cmd->add_option("--lambda-max", lambda_max, "enumeration cutoff");

    auto* verify_cmd = app.add_subcommand("verify", "run every cross-check");

    // let --format appear after the subcommand name too
    for (auto* sub : {coeffs, terms, poly, zeta_cmd, spectrum_cmd, verify_cmd})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (coeffs->parsed()) {
        const CrossSection cs = build_geometry(gc);
        heatcone::heat::CoeffList list = [&] {
            if (const auto* c = std::get_if<heatcone::Circle>(&cs)) {
                if (!c->sin_alpha.exact)
                    throw std::invalid_argument("coefficients need a rational sine");
                return heatcone::heat::circle_list(c->sin_alpha.r, jmax);
            }
            if (const auto* s = std::get_if<heatcone::Sphere>(&cs))
                return heatcone::heat::scaled_list(s->n, jmax, s->kappa, s->vol_ratio);
            if (const auto* sf = std::get_if<heatcone::SpaceForm>(&cs))
                return heatcone::heat::scaled_list(sf->n, jmax, Rational(1), sf->vol_ratio);
            if (const auto* l = std::get_if<heatcone::Lens>(&cs))
                return heatcone::heat::scaled_list(3, jmax, Rational(1),
                                                   Rational(1, l->k));
            if (const auto* p = std::get_if<heatcone::RealProjective>(&cs))
                return heatcone::heat::scaled_list(p->n, jmax, Rational(1),
                                                   Rational(1, 2));
            if (const auto* t = std::get_if<heatcone::FlatTorus>(&cs)) {
                std::vector<heatcone::exact::ExactScalar> v(jmax + 1);
                v[0] = heatcone::exact::ExactScalar(t->volume);
                return heatcone::heat::CoeffList(t->n, std::move(v));
            }
            throw std::invalid_argument("no coefficient list for this geometry");
        }();
        if (format == "csv") {
            std::printf("j,value,approx\n");
            for (std::size_t j = 0; j < list.values.size(); ++j)
                std::printf("%zu,%s,%s\n", j, list.values[j].to_text().c_str(),
                            heatcone::io::fmt(list.values[j].to_double()).c_str());
        } else {
            emit(heatcone::io::coeff_list_json(list), format);
        }
        return 0;
    }

    if (terms->parsed()) {
        const CrossSection cs = build_geometry(gt);
        const int m = m_override > 0 ? m_override : heatcone::dimension(cs) + 1;
        const auto st = heatcone::singular::singular_terms(cs, m, combo_for(cs));
        if (format == "csv")
            throw std::invalid_argument("terms has no csv form; use json or text");
        emit(heatcone::io::singular_json(st), format);
        return 0;
    }

    if (poly->parsed()) {
        const auto p = heatcone::curvpoly::build(poly_n, Rational(1));
        if (format == "csv") {
            std::printf("power,coefficient\n");
            for (std::size_t j = 0; j < p.coeffs.size(); ++j)
                std::printf("%zu,%s\n", j, p.coeffs[j].to_text().c_str());
        } else {
            emit(heatcone::io::poly_json(p, with_roots), format);
        }
        return 0;
    }

    if (zeta_cmd->parsed()) {
        const CrossSection cs = build_geometry(gz);
        const auto combo = combo_for(cs);
        if (!combo)
            throw std::invalid_argument("no zeta combination for this geometry");
        const Rational s = parse_rational(s_text);
        nlohmann::json out;
        out["s"] = s_text;
        if (want_residue) {
            const auto conv = convention == "argument"
                                  ? heatcone::zeta::Convention::zeta_argument
                                  : heatcone::zeta::Convention::s_variable;
            out["residue"] =
                heatcone::io::exact_json(heatcone::zeta::combo_residue(*combo, s, conv));
            out["convention"] = convention;
        } else {
            try {
                out["value"] = heatcone::io::exact_json(
                    heatcone::zeta::combo_value(*combo, s));
            } catch (const heatcone::zeta::NonExactPoint&) {
                out["value"] = {{"approx", heatcone::io::fmt(
                                    heatcone::zeta::combo_value_numeric(
                                        *combo, s.convert_to<double>()))},
                                {"provenance", "numeric"}};
            }
        }
        emit(out, format);
        return 0;
    }

    if (spectrum_cmd->parsed()) {
        const CrossSection cs = build_geometry(gs);
        const auto sp = heatcone::oracle::spectrum(cs, lambda_max);
        if (format == "csv" || format == "text") {
            std::printf("lambda,multiplicity\n");
            for (const auto& e : sp.entries)
                std::printf("%s,%lld\n", heatcone::io::fmt(e.lambda).c_str(),
                            static_cast<long long>(e.mult));
        } else {
            nlohmann::json lines = nlohmann::json::array();
            for (const auto& e : sp.entries)
                lines.push_back({{"lambda", heatcone::io::fmt(e.lambda)},
                                 {"multiplicity", e.mult}});
            emit({{"n", sp.n}, {"lambda_max", heatcone::io::fmt(sp.lambda_max)},
                  {"entries", lines}},
                 format);
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        if (format == "json") {
            const auto doc = heatcone::verify::report_json();
            std::cout << doc.dump(2) << "\n";
            for (const auto& cr : doc["acceptance"])
                if (!cr["pass"].get<bool>()) return 1;
            return 0;
        }
        int failures = 0;
        for (const auto& cr : heatcone::verify::run_acceptance()) {
            const bool ok = cr.passed();
            failures += ok ? 0 : 1;
            std::printf("%s %s\n", ok ? "PASS" : "FAIL", cr.id.c_str());
            if (!ok)
                for (const auto& c : cr.checks)
                    if (!c.pass)
                        std::printf("  failed %s: %s\n", c.name.c_str(),
                                    c.detail.c_str());
        }
        for (const auto& c : heatcone::verify::run_informational())
            std::printf("note %s: %s\n", c.name.c_str(), c.detail.c_str());
        return failures > 0 ? 1 : 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
