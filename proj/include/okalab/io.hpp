#pragma once

// JSON encodings. Exact scalars travel as canonical strings ("1/2-3*i"),
// complex doubles as [re, im], polynomials as dense degree-ascending
// coefficient lists.

#include <json.hpp>

#include "okalab/arrangement.hpp"
#include "okalab/covering.hpp"
#include "okalab/relations.hpp"
#include "okalab/uni_poly.hpp"
#include "okalab/verification.hpp"

namespace okalab::io {

using json = nlohmann::json;

json to_json(const GaussianRational& z);
json to_json(const VectorQ& v);
json to_json(const MatrixQ& m);
json to_json(const Arrangement& arr);
json to_json(const Circuit& c);
json to_json(const ClassificationReport& r);
json to_json(const DiagonalHyperplane& d);
json to_json(const AssociatedSubspace& a);
json to_json(const ObstructionReport& r);
json to_json(const TangentConditions& t);
json to_json(const UniPolyQ& p);
json to_json(const Polynomial& p);
json to_json(Complex z);
json to_json(const VerificationRecord& r);
json to_json(const LimitCheck& c);

GaussianRational scalar_from_json(const json& j);
VectorQ vector_from_json(const json& j);
MatrixQ matrix_from_json(const json& j);
Circuit circuit_from_json(const json& j);
ClassificationReport report_from_json(const json& j);
DiagonalHyperplane diagonal_from_json(const json& j);
AssociatedSubspace associated_from_json(const json& j);
ObstructionReport obstruction_from_json(const json& j);
UniPolyQ unipoly_from_json(const json& j);
Complex complex_from_json(const json& j);
Eigen::VectorXcd complex_vector_from_json(const json& j);
/// {"nvars": n, "coeffs": nested} where the nesting depth is n and level i
/// indexes the exponent of x_i; a bare list of [re, im] pairs is univariate.
Polynomial polynomial_from_json(const json& j);

}  // namespace okalab::io
