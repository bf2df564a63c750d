#pragma once

#include <json.hpp>

#include "silverline/algebraic_real.hpp"
#include "silverline/dichotomy.hpp"
#include "silverline/matrix.hpp"
#include "silverline/number_field.hpp"

namespace silverline {

using Json = nlohmann::ordered_json;

/// Exact "p/q" strings; the reader also accepts plain integers and decimals.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// Array of decimal-string coefficients, lowest degree first.
Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {defining, lo, hi}.
Json algebraic_to_json(const AlgebraicReal& x);
AlgebraicReal algebraic_from_json(const Json& j);

/// Row-major array of decimal strings.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// Coordinates in 1, X, ..., X^{N-1} as "p/q" strings.
Json field_element_to_json(const FieldElement& x);
FieldElement field_element_from_json(const NumberField& field, const Json& j);

Json certificate_to_json(const DichotomyCertificate& cert);
DichotomyCertificate certificate_from_json(const Json& j);

}  // namespace silverline
