#pragma once

#include <json.hpp>

#include "deligne/bipartition_matrix.hpp"
#include "deligne/diagrams.hpp"
#include "deligne/fock.hpp"
#include "deligne/grothendieck.hpp"

namespace deligne {

using Json = nlohmann::ordered_json;

/// An integer, or the string "generic".
Json param_to_json(ParamT t);
ParamT param_from_json(const Json& j);

/// {"t", "family", "window": [L, R], "symbols"}.
Json diagram_to_json(const WeightDiagram& d);
/// Rebuilds window, labels, tails, family and t. The source bipartition is
/// not part of the schema and is left empty.
WeightDiagram diagram_from_json(const Json& j);

/// {"t", "N", "entries": [{"row", "col", "val"}]}, nonzero entries only,
/// rows and columns in the Bipartition order.
Json matrix_to_json(const BipartitionMatrix& m, ParamT t);
BipartitionMatrix matrix_from_json(const Json& j);

/// {"kind": "int" | "shifted", "c"}.
Json eigen_to_json(const EigenLabel& e);
EigenLabel eigen_from_json(const Json& j);

/// Basis label -> coefficient.
Json vector_to_json(const AnyVector& v);

}  // namespace deligne
