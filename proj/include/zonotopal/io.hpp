#pragma once

// JSON encodings. Rationals are strings "p/q" (or "p"); polynomials are lists of
// {"exps": [...], "coef": "p/q"} in graded-lex order. Malformed input raises
// FormatError.

#include <json.hpp>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/interpolate.hpp"
#include "zonotopal/pspace.hpp"
#include "zonotopal/spline.hpp"
#include "zonotopal/vector_list.hpp"
#include "zonotopal/zonotope.hpp"

namespace zonotopal::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Accepts a string "p/q" or an integer.
Rational rational_from_json(const Json& j);

Json to_json(const IntVec& v);
IntVec int_vector_from_json(const Json& j, std::size_t dim);
RatVector rational_vector_from_json(const Json& j, std::size_t dim);

/// {"dim": d, "vectors": [[...], ...]}; "dim" may be omitted when the list is nonempty.
Json to_json(const VectorList& x);
VectorList vector_list_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j, std::size_t nvars);

Json to_json(const PSpaceBasis& b);
Json to_json(const LatticePointSet& s);
Json to_json(const TuttePoly& t);
Json to_json(const PiecewiseSpline& s);
Json to_json(const Interpolant& i);

struct ValuesFile {
    VectorList matrix;
    GridFunction values;
};

/// {"matrix": {...}, "values": [{"point": [...], "value": "p/q"}, ...]}
ValuesFile values_file_from_json(const Json& j);
Json to_json(const ValuesFile& v);

/// Copy of j with every exact rational string replaced by its double value.
Json approximate(const Json& j);

}  // namespace zonotopal::io
