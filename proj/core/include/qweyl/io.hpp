#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qweyl/modules.hpp"
#include "qweyl/pidegree.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

using json = nlohmann::json;

/// Parses a scalar literal: a polynomial in the symbol t (standing for q^2)
/// with rational coefficients, e.g. "1/2*t^2 - 3*t + 1". The "*" is optional.
/// Throws ParseError carrying the offending position.
CycNum parse_scalar(const FieldPtr& ctx, const std::string& text);

/// Inverse of parse_scalar, highest-degree term first; "0" for zero.
std::string scalar_literal(const CycNum& c);

/// CycNum <-> array of "p/q" strings of length phi(l), lowest order first.
json cycnum_to_json(const CycNum& c);
CycNum cycnum_from_json(const FieldPtr& ctx, const json& j);

/// Mat <-> {"rows", "cols", "entries": [[CycNum...]...]}.
json mat_to_json(const Mat& m);
Mat mat_from_json(const FieldPtr& ctx, const json& j);

/// AlgElem <-> list of {"a","b","c","coeff"}.
json algelem_to_json(const AlgElem& e);
AlgElem algelem_from_json(const FieldPtr& ctx, const json& j);

/// Identity report: list of {"identity","params","pass","witness"?}.
json report_to_json(const IdentityReport& r, const Params& p, int a_max);

json pi_report_to_json(const PIReport& r);

/// Rep <-> {"l","alpha","beta","gamma","dim","X","Y","Z"}; the algebra
/// parameters travel as scalar literals.
json rep_to_json(const Rep& r);
Rep rep_from_json(const json& j);

/// FamilySpec <-> {"family","params"} with literal-string parameter values.
json family_spec_to_json(const FamilySpec& s);
FamilySpec family_spec_from_json(const FieldPtr& ctx, const json& j);

/// ClassifyResult -> {"family","canonical","scalars"} plus "s" for M3.
json classify_result_to_json(const ClassifyResult& r);

}  // namespace qweyl
