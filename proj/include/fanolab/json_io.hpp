#pragma once

// JSON serialization for every file format the CLI speaks. Rationals travel
// as "p/q" strings so nothing is ever rounded.

#include "fanolab/cones.hpp"
#include "fanolab/genus.hpp"
#include "fanolab/laurent.hpp"
#include "fanolab/monodromy.hpp"
#include "fanolab/mutation.hpp"
#include "fanolab/periods.hpp"
#include "fanolab/polygon.hpp"

#include <json.hpp>

namespace fanolab {

using Json = nlohmann::json;

Json polygon_to_json(const FanoPolygon& p);
FanoPolygon polygon_from_json(const Json& j);

Json edges_to_json(const FanoPolygon& p);
Json content_to_json(const SingularityContent& c);
SingularityContent content_from_json(const Json& j);

Json laurent_to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

Json symbolic_to_json(const SymbolicLaurentPolynomial& f);

Json matrix_to_json(const MonodromyMatrix& m);
MonodromyMatrix matrix_from_json(const Json& j);

Json sequence_to_json(const PeriodSequence& s);
PeriodSequence sequence_from_json(const Json& j);

Json operator_to_json(const DifferentialOperator& op);
DifferentialOperator operator_from_json(const Json& j);

Json graph_to_json(const MutationGraph& g);
Json genus_to_json(const GenusReport& r);
Json prediction_to_json(const Prediction& p);

} // namespace fanolab
