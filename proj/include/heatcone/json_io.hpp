#pragma once

#include <string>

#include <json.hpp>

#include "heatcone/curvpoly.hpp"
#include "heatcone/exact.hpp"
#include "heatcone/heat_coeffs.hpp"
#include "heatcone/singular.hpp"
#include "heatcone/zeta.hpp"

// Serialization used by the command line tool and the check runner.  Floats
// always go through fmt() so that output is byte-identical between runs.

namespace heatcone::io {

std::string fmt(double v);

const char* provenance_name(singular::Provenance p);
const char* verdict_name(singular::Verdict v);

nlohmann::json exact_json(const exact::ExactScalar& v);
nlohmann::json term_value_json(const singular::TermValue& t);
nlohmann::json singular_json(const singular::SingularTerms& st);
nlohmann::json combo_json(const zeta::Combo& c);
nlohmann::json coeff_list_json(const heat::CoeffList& a);
nlohmann::json poly_json(const curvpoly::CurvaturePolynomial& p, bool with_roots);
nlohmann::json root_json(const curvpoly::Root& r);

}  // namespace heatcone::io
