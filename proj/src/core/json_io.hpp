#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "matrix.hpp"
#include "multivector.hpp"
#include "polyform.hpp"
#include "tensor.hpp"

namespace extalg {

// Canonical JSON wire formats. Emission is deterministic: object keys keep
// the documented order, terms are sorted (grade, combination rank), rationals
// use the canonical "p/q" text form. Every emitted document re-parses to an
// equal value.
//
//   matrix   {"rows": r, "cols": c, "entries": [[".."]]}
//   tensor   {"dim": n, "order": m, "components": [".."]}
//   mvec     {"dim": n, "terms": [{"index": [..], "coeff": ".."}]}
//   form     {"vars": n, "terms": [{"index": [..], "poly": [{"exps": [..], "coeff": ".."}]}]}
//
// Parsers throw ParseError on malformed documents (bad structure, bad
// rational strings, non-increasing index words, duplicate keys). Zero
// coefficients are accepted and canonicalized away.

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::ordered_json matrix_to_json(const Matrix& m);

Tensor tensor_from_json(const nlohmann::json& j);
nlohmann::ordered_json tensor_to_json(const Tensor& t);

GradedElement graded_from_json(const nlohmann::json& j);
nlohmann::ordered_json graded_to_json(const GradedElement& v);

PolyForm form_from_json(const nlohmann::json& j);
nlohmann::ordered_json form_to_json(const PolyForm& f);

// String-level wrappers; parse throws ParseError on invalid JSON text.
nlohmann::json parse_json_text(std::string_view text);
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace extalg
