#pragma once

#include "json.hpp"

#include "algrad/algebra.hpp"
#include "algrad/laws.hpp"
#include "algrad/matrix.hpp"
#include "algrad/polynomial.hpp"
#include "algrad/roots.hpp"

namespace algrad {

using Json = nlohmann::json;

/// {"n": 2, "field": "C", "entries": [["1","-1i"],["1i","-1"]]}
Json matrix_to_json(const MatrixElement& a);
/// Throws ParseError on a malformed document, ShapeError on ragged entries.
MatrixElement matrix_from_json(const Json& j, Mode mode = Mode::Exact);

/// {"field": "R", "coords": ["1", "1/2", ...]}
Json element_to_json(const Element& e, Field field);
std::vector<Scalar> coords_from_json(const Json& j, Field field, Mode mode = Mode::Exact);

/// Array of scalar strings, low-to-high.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j, Domain d);

Json radius_report_to_json(const RadiusReport& r);
Json law_report_to_json(const LawReport& r, Field field);

}  // namespace algrad
